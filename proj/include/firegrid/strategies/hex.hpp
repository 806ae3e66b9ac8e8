#ifndef FIREGRID_STRATEGIES_HEX_HPP
#define FIREGRID_STRATEGIES_HEX_HPP

#include <array>
#include <memory>
#include <optional>

#include "firegrid/engine.hpp"

namespace firegrid {

// Local frame around v0 on the hexagonal lattice: v0 becomes the even
// origin, optionally mirrored a -> -a.
struct HexFrame {
    Vertex origin;
    bool mirrored = false;

    Vertex toGlobal(Vertex local) const { return hex::toGlobal(origin, mirrored ? hex::mirror(local) : local); }
    Vertex toLocal(Vertex v) const {
        Vertex l = hex::toLocal(origin, v);
        return mirrored ? hex::mirror(l) : l;
    }
};

// Spiral segments in the even-origin frame. Segment type B is the column
// (s, -j), j = 0..s, from the 0 degree ray to the 300 degree ray. Type A
// runs from the 60 degree staircase down to the 0 degree ray. Vertex j of a
// segment started at s has distance s + j.
namespace spiral {

inline std::vector<Vertex> segmentB(int s) {
    std::vector<Vertex> out;
    for (int j = 0; j <= s; ++j) out.push_back({s, -j});
    return out;
}

inline std::vector<Vertex> segmentA(int s) {
    Vertex v = (s % 2 == 0) ? Vertex{s / 2, s / 2} : Vertex{(s + 1) / 2, (s - 1) / 2};
    std::vector<Vertex> out{v};
    for (;;) {
        Vertex nv = hex::isEven(v) ? Vertex{v.a + 1, v.b} : Vertex{v.a + 2, v.b - 1};
        if (nv.b < 0) break;
        v = nv;
        out.push_back(v);
    }
    return out;
}

// Clockwise walk through the six cones: (type, number of 120 degree turns).
inline constexpr std::array<std::pair<char, int>, 6> kOrder{
    {{'B', 0}, {'A', 2}, {'B', 2}, {'A', 1}, {'B', 1}, {'A', 0}}};

inline std::vector<Vertex> segment(int index, int s) {
    auto [type, k] = kOrder[((index % 6) + 6) % 6];
    auto seg = type == 'B' ? segmentB(s) : segmentA(s);
    for (Vertex& v : seg) v = hex::rotate(v, k);
    return seg;
}

}  // namespace spiral

// Successive straight segments, one vertex per turn at distance equal to
// the local time. Segment k+1 starts right after the last vertex of
// segment k. Local time of the first protection is t0 + 1.
class HexSpiralPlan {
public:
    HexSpiralPlan(HexFrame frame, int t0, int startIndex = 0)
        : frame_(frame), t0_(t0), index_(startIndex), s_(t0 + 1) {}

    // next planned vertex (global) and its local time
    std::pair<Vertex, int> next() {
        while (cursor_ >= seg_.size()) {
            if (!seg_.empty()) {
                s_ = hex::distanceFromOrigin(seg_.back()) + 1;
                ++index_;
            }
            seg_ = spiral::segment(index_, s_);
            cursor_ = 0;
            segmentStarts_.push_back(s_);
        }
        Vertex l = seg_[cursor_++];
        return {frame_.toGlobal(l), hex::distanceFromOrigin(l)};
    }

    const std::vector<int>& segmentStarts() const { return segmentStarts_; }
    const HexFrame& frame() const { return frame_; }
    int t0() const { return t0_; }

private:
    HexFrame frame_;
    int t0_;
    int index_;
    int s_;
    std::vector<Vertex> seg_;
    std::size_t cursor_ = 0;
    std::vector<int> segmentStarts_;
};

// One spiral vertex per turn. Planned vertices that are no longer free are
// skipped; that only happens when other protections or fires are around.
class HexSpiral : public Strategy {
public:
    HexSpiral(Vertex v0, int t0, int startIndex = 0, bool mirrored = false)
        : plan_(HexFrame{v0, mirrored}, t0, startIndex), v0_(v0), start_(startIndex), mirrored_(mirrored) {}

    std::string name() const override { return "hex_spiral"; }
    nlohmann::json params() const override {
        return {{"v0", {v0_.a, v0_.b}}, {"t0", plan_.t0()}, {"start", start_}, {"mirror", mirrored_}};
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HexSpiral>(*this); }

    std::vector<Vertex> decide(const GameState& s, int) override {
        std::vector<Vertex> out;
        for (int guard = 0; guard < 1 << 20 && static_cast<int>(out.size()) < std::min(1, s.budgetRemaining());
             ++guard) {
            auto [v, t] = plan_.next();
            lastTime_ = t;
            if (!s.lattice().contains(v)) break;  // beyond the window: this turn's vertex is lost
            if (!s.isFree(v)) continue;
            out.push_back(v);
        }
        return out;
    }

    const HexSpiralPlan& plan() const { return plan_; }
    int lastLocalTime() const { return lastTime_; }

private:
    HexSpiralPlan plan_;
    Vertex v0_;
    int start_;
    bool mirrored_;
    int lastTime_ = 0;
};

// Normalizes the fire into a ball N_{<=t}(v0), then spirals around v0.
class HexSlowdown : public Strategy {
public:
    std::string name() const override { return "hex_slowdown"; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HexSlowdown>(*this); }

    std::vector<Vertex> decide(const GameState& s, int turn) override {
        if (!inner_) {
            auto [v0, t] = coverBall(s);
            v0_ = v0;
            t0_ = std::max(t, 0);
            inner_ = std::make_unique<HexSpiral>(v0_, t0_);
        }
        return inner_->decide(s, turn);
    }
    HexSlowdown() = default;
    HexSlowdown(const HexSlowdown& o) : v0_(o.v0_), t0_(o.t0_) {
        if (o.inner_) inner_ = std::make_unique<HexSpiral>(*o.inner_);
    }
    nlohmann::json params() const override { return {{"v0", {v0_.a, v0_.b}}, {"t0", t0_}}; }
    const HexSpiral* spiral() const { return inner_.get(); }
    Vertex center() const { return v0_; }
    int t0() const { return t0_; }

private:
    std::unique_ptr<HexSpiral> inner_;
    Vertex v0_{};
    int t0_ = 0;
};

// Two rays around the even local origin. The odd ray O_k = (2k, 1) is
// protected at turn 2k+1, the even ray E_k = (-2-k, -k) at turn 2k+2; each
// lies at distance equal to its turn. The fire keeps to the 120 degree
// sector between them.
struct HexRay {
    explicit HexRay(char k = 'O') : kind(k) {}

    char kind;
    int k = 0;                 // next regular index
    std::optional<int> bent;   // index m of the bend
    int along = 0;             // vertices placed after the bend
    std::optional<Vertex> pending;

    Vertex next() {
        if (!bent) {
            Vertex v = kind == 'O' ? Vertex{2 * k, 1} : Vertex{-2 - k, -k};
            ++k;
            return v;
        }
        int m = *bent;
        ++along;
        if (kind == 'O') return {2 * m + 1 + along, -along};
        return {-1 - m + along, -m - 1 - along};
    }
    // bend at the last regular vertex; both sit at the same distance
    Vertex bendAtLast() {
        int m = k - 1;
        bent = m;
        return kind == 'O' ? Vertex{2 * m + 1, 0} : Vertex{-1 - m, -m - 1};
    }
};

class HexTwoRay : public Strategy {
public:
    explicit HexTwoRay(Vertex v0) : frame_{v0, false} {}
    std::string name() const override { return "hex_two_ray"; }
    nlohmann::json params() const override { return {{"v0", {frame_.origin.a, frame_.origin.b}}}; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HexTwoRay>(*this); }

    std::vector<Vertex> decide(const GameState& s, int turn) override {
        if (s.budgetRemaining() < 1) return {};
        HexRay& r = (turn % 2 == 1) ? odd_ : even_;
        Vertex v = frame_.toGlobal(r.next());
        if (!s.lattice().contains(v)) return {};
        return {v};
    }

private:
    HexFrame frame_;
    HexRay odd_{'O'}, even_{'E'};
};

// Two rays until extra firefighters arrive. The first extra bends one ray
// by 60 degrees, the second the other one; bending the ray whose turn it is
// not happens one turn early (its bend vertex now, its regular vertex next
// turn). Behind the bends a strip of constant width grows; once it is long
// enough compared with the normalized fire radius a spiral closes it off.
class HexContain : public Strategy {
public:
    struct Options {
        int stripFactor = 128;   // strip length >= stripFactor * t before spiraling
        int spiralStart = -1;    // -1: pick by lookahead
        bool mirror = false;
        int lookahead = 4096;    // turns simulated per orientation candidate
    };

    explicit HexContain(Vertex v0) : HexContain(v0, Options{}) {}
    HexContain(Vertex v0, Options opt) : frame_{v0, false}, opt_(opt) {}
    HexContain(const HexContain& o)
        : frame_(o.frame_), opt_(o.opt_), odd_(o.odd_), even_(o.even_), bendTurn_(o.bendTurn_),
          bends_(o.bends_), spiralTurn_(o.spiralTurn_), spiralT_(o.spiralT_) {
        if (o.spiral_) spiral_ = std::make_unique<HexSpiral>(*o.spiral_);
    }

    std::string name() const override { return "hex_contain"; }
    nlohmann::json params() const override {
        nlohmann::json j{{"v0", {frame_.origin.a, frame_.origin.b}}, {"strip_factor", opt_.stripFactor}};
        if (spiral_) j["spiral"] = spiral_->params();
        return j;
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HexContain>(*this); }

    std::vector<Vertex> decide(const GameState& s, int turn) override {
        if (!spiral_ && bends_ == 2 && turn - 1 >= bendTurn_) maybeStartSpiral(s, turn);
        if (spiral_) {
            auto out = spiral_->decide(s, turn);
            return out;
        }
        std::vector<Vertex> out;
        int extra = s.budgetRemaining() - 1;
        if (s.budgetRemaining() < 1) return out;
        HexRay& r = (turn % 2 == 1) ? odd_ : even_;
        HexRay& q = (turn % 2 == 1) ? even_ : odd_;
        if (r.pending) {
            out.push_back(frame_.toGlobal(*r.pending));
            r.pending.reset();
        } else {
            out.push_back(frame_.toGlobal(r.next()));
        }
        if (extra > 0 && !r.bent) {
            out.push_back(frame_.toGlobal(r.bendAtLast()));
            --extra;
            noteBend(turn);
        }
        if (extra > 0 && !q.bent) {
            Vertex reg = q.next();
            out.push_back(frame_.toGlobal(q.bendAtLast()));
            q.pending = reg;
            --extra;
            noteBend(turn + 1);
        }
        std::erase_if(out, [&](Vertex v) { return !s.lattice().contains(v); });
        return out;
    }

    bool spiraling() const { return spiral_ != nullptr; }
    int spiralTurn() const { return spiralTurn_; }
    int spiralT() const { return spiralT_; }
    const HexSpiral* spiral() const { return spiral_.get(); }
    int bends() const { return bends_; }

private:
    void noteBend(int t) {
        ++bends_;
        bendTurn_ = std::max(bendTurn_, t);
    }

    void maybeStartSpiral(const GameState& s, int turn) {
        int length = turn - 1 - bendTurn_;
        auto nz = coverBall(s);
        if (nz.second < 0 || length < opt_.stripFactor * std::max(nz.second, 1)) return;
        Vertex v0 = nz.first;
        int t = nz.second;
        spiralTurn_ = turn;
        spiralT_ = t;
        if (opt_.spiralStart >= 0) {
            spiral_ = std::make_unique<HexSpiral>(v0, t, opt_.spiralStart, opt_.mirror);
            return;
        }
        // deterministic lookahead over the twelve orientations
        std::optional<std::pair<int, std::pair<int, bool>>> best;
        for (int m = 0; m < 2; ++m)
            for (int i = 0; i < 6; ++i) {
                GameState copy = s;
                HexSpiral trial(v0, t, i, m == 1);
                int when = -1;
                for (int k = 0; k < opt_.lookahead; ++k) {
                    try {
                        copy.protect(trial.decide(copy, copy.turn() + 1));
                        copy.spread();
                    } catch (const DomainError&) {
                        break;
                    }
                    if (copy.isContained()) {
                        when = copy.turn();
                        break;
                    }
                }
                if (when >= 0 && (!best || when < best->first)) best = {when, {i, m == 1}};
            }
        auto [i, mir] = best ? best->second : std::pair<int, bool>{0, false};
        spiral_ = std::make_unique<HexSpiral>(v0, t, i, mir);
    }

    HexFrame frame_;
    Options opt_;
    HexRay odd_{'O'}, even_{'E'};
    int bendTurn_ = 0;
    int bends_ = 0;
    std::unique_ptr<HexSpiral> spiral_;
    int spiralTurn_ = -1;
    int spiralT_ = 0;
};

}  // namespace firegrid

#endif
