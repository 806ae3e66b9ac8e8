#ifndef FIREGRID_STRATEGIES_TRI_HPP
#define FIREGRID_STRATEGIES_TRI_HPP

#include <array>
#include <memory>

#include "firegrid/engine.hpp"

namespace firegrid {

// Two-firefighter spiral on the triangular lattice. A segment started at s
// covers local turns s..2s-1 and protects the pair (2j, s-j), (2j+1, s-j-1)
// at turn s+j, rotated clockwise by 60 degrees per segment. Both vertices
// of a pair lie at distance s+j.
class TriSpiralPlan {
public:
    TriSpiralPlan(Vertex v0, int t0) : v0_(v0), t0_(t0), s_(t0 + 1) {}

    std::array<Vertex, 2> next() {
        if (j_ >= s_) {
            s_ *= 2;
            j_ = 0;
            ++k_;
        }
        if (j_ == 0) starts_.push_back(s_);
        Vertex p{2 * j_, s_ - j_}, q{2 * j_ + 1, s_ - j_ - 1};
        for (int i = 0; i < k_ % 6; ++i) p = tri::rotateCw60(p), q = tri::rotateCw60(q);
        ++j_;
        return {v0_ + p, v0_ + q};
    }

    const std::vector<int>& segmentStarts() const { return starts_; }
    Vertex center() const { return v0_; }
    int t0() const { return t0_; }

private:
    Vertex v0_;
    int t0_;
    int s_;
    int j_ = 0;
    int k_ = 0;
    std::vector<int> starts_;
};

class TriSpiral2 : public Strategy {
public:
    std::string name() const override { return "tri_spiral2"; }
    TriSpiral2() = default;
    TriSpiral2(const TriSpiral2& o) : v0_(o.v0_), t0_(o.t0_) {
        if (o.plan_) plan_ = std::make_unique<TriSpiralPlan>(*o.plan_);
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<TriSpiral2>(*this); }
    nlohmann::json params() const override { return {{"v0", {v0_.a, v0_.b}}, {"t0", t0_}}; }

    std::vector<Vertex> decide(const GameState& s, int) override {
        if (!plan_) {
            auto [v0, t] = coverBall(s);
            v0_ = v0;
            t0_ = std::max(t, 0);
            plan_ = std::make_unique<TriSpiralPlan>(v0_, t0_);
        }
        std::vector<Vertex> out;
        if (s.budgetRemaining() < 2) return out;
        for (Vertex v : plan_->next())
            if (s.lattice().contains(v) && s.isFree(v)) out.push_back(v);
        return out;
    }

    const TriSpiralPlan* plan() const { return plan_.get(); }
    Vertex center() const { return v0_; }
    int t0() const { return t0_; }

private:
    std::unique_ptr<TriSpiralPlan> plan_;
    Vertex v0_{};
    int t0_ = 0;
};

// Triangular vertices A sit on the even hexagonal vertices: (p, q) maps to
// (2p+q, q). Tri neighbors become hex vertices at distance 2. The odd hex
// vertices are the shifted copy A + (1, 0).
struct LatticeEmbedding {
    static Vertex embed(Vertex t) { return {2 * t.a + t.b, t.b}; }
    static Vertex shifted(Vertex t) { return embed(t) + Vertex{1, 0}; }
    static bool inA(Vertex h) { return hex::isEven(h); }
    // tri preimage of a hex vertex, through A or through the shifted copy
    static Vertex preimage(Vertex h) {
        if (!inA(h)) h = h - Vertex{1, 0};
        return {(h.a - h.b) / 2, h.b};
    }
};

struct Translation {
    std::vector<std::vector<Vertex>> hexMoves;
    BudgetSchedule hexSchedule;
    std::vector<Vertex> hexFires;
    int triTurns = 0;       // t
    long long triBurnt = 0; // b
    long long firefighters = 0;  // f
};

// Replays the triangular protection script (2x firefighters per turn) to
// containment, then splits each turn i into hex turns 2i-1 and 2i with x
// protections each, earliest first.
inline Translation translateTriToHex(const std::vector<std::vector<Vertex>>& triMoves, const BudgetSchedule& triSchedule,
                                     const std::vector<Vertex>& triFires, int triWindow = 64) {
    if (triSchedule.base % 2 != 0 || !triSchedule.extras.empty())
        throw DomainError("PreconditionViolated", "triangular schedule must be an even constant budget");
    GameState s(Lattice::triangular(triWindow), triFires, triSchedule);
    ScriptStrategy script(triMoves, "tri_script");
    long long f = 0;
    auto trace = run(s, script, static_cast<int>(triMoves.size()) + 1);
    if (!trace.containedAtTurn)
        throw DomainError("PreconditionViolated", "triangular strategy does not contain the fire");
    Translation out;
    out.triTurns = *trace.containedAtTurn;
    out.triBurnt = trace.burntCount;
    int x = triSchedule.base / 2;
    out.hexSchedule = BudgetSchedule{x, {}};
    for (Vertex v : triFires) out.hexFires.push_back(LatticeEmbedding::embed(v));
    for (int i = 0; i < out.triTurns; ++i) {
        const auto& mv = trace.rounds[i].protectedVertices;
        f += static_cast<long long>(mv.size());
        std::vector<Vertex> first, second;
        for (std::size_t j = 0; j < mv.size(); ++j)
            (j < static_cast<std::size_t>(x) ? first : second).push_back(LatticeEmbedding::embed(mv[j]));
        out.hexMoves.push_back(first);
        out.hexMoves.push_back(second);
    }
    out.firefighters = f;
    return out;
}

}  // namespace firegrid

#endif
