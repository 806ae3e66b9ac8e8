#ifndef FIREGRID_STRATEGIES_WEDGE_HPP
#define FIREGRID_STRATEGIES_WEDGE_HPP

#include <memory>
#include <optional>

#include "firegrid/engine.hpp"

namespace firegrid {

// Dihedral map of the square grid that sends a start into 0 <= b <= a.
// Reflections use x -> -x on odd grids (and the infinite grid) and
// x -> -1-x on even grids, which keep C fixed.
struct SquareSymmetry {
    int n = 0;  // 0 for the infinite grid
    bool swap = false;
    bool flipA = false;
    bool flipB = false;

    int reflect(int x) const { return (n > 0 && n % 2 == 0) ? -1 - x : -x; }

    Vertex apply(Vertex v) const {
        if (flipA) v.a = reflect(v.a);
        if (flipB) v.b = reflect(v.b);
        if (swap) std::swap(v.a, v.b);
        return v;
    }
    Vertex invert(Vertex v) const {
        if (swap) std::swap(v.a, v.b);
        if (flipB) v.b = reflect(v.b);
        if (flipA) v.a = reflect(v.a);
        return v;
    }

    static SquareSymmetry normalizing(Vertex s, int n) {
        SquareSymmetry g{n};
        if (s.a < 0) g.flipA = true;
        if (s.b < 0) g.flipB = true;
        Vertex t = g.apply(s);
        // on even grids the reflected coordinate can still be -1 -> 0 only;
        // all coordinates are now >= 0
        if (t.b > t.a) g.swap = true;
        return g;
    }
};

// Two diagonal walls toward the west of the start, alternating down and up;
// once the upper wall meets the north border the lower wall turns into a
// vertical column heading south.
class SquareWedge : public Strategy {
public:
    SquareWedge(Vertex start, int n) : start_(start), n_(n), sym_(SquareSymmetry::normalizing(start, n)) {
        Vertex s = sym_.apply(start);
        a_ = s.a;
        b_ = s.b;
    }

    std::string name() const override { return "square_wedge"; }
    nlohmann::json params() const override {
        return {{"start", {start_.a, start_.b}}, {"n", n_}};
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<SquareWedge>(*this); }

    // k-th element (0-based) of the normalized protection sequence, if any
    std::optional<Vertex> item(long long k) const {
        if (n_ == 0) {
            long long j = k / 2 + 1;
            if (k % 2 == 0) return Vertex{a_ - static_cast<int>(j), b_ - static_cast<int>(j) + 1};
            return Vertex{a_ - static_cast<int>(j), b_ + static_cast<int>(j)};
        }
        int N = (n_ + 1) / 2;
        long long kmax = N - 1 - b_;  // up-wall length
        if (k < 2 * kmax) {
            long long j = k / 2 + 1;
            if (k % 2 == 0) return Vertex{a_ - static_cast<int>(j), b_ - static_cast<int>(j) + 1};
            return Vertex{a_ - static_cast<int>(j), b_ + static_cast<int>(j)};
        }
        long long c = k - 2 * kmax;  // column index
        int x0 = a_ - N + b_;
        long long y = 2LL * b_ - N + 1 - c;
        if (y < -(n_ / 2)) return std::nullopt;
        return Vertex{x0, static_cast<int>(y)};
    }

    std::vector<Vertex> decide(const GameState& s, int) override {
        std::vector<Vertex> out;
        int want = s.budgetRemaining();
        const Lattice& lat = s.lattice();
        while (static_cast<int>(out.size()) < want) {
            auto it = item(next_);
            if (!it) break;
            ++next_;
            Vertex v = sym_.invert(*it);
            if (!lat.contains(v) || !s.isFree(v)) continue;
            out.push_back(v);
        }
        return out;
    }

private:
    Vertex start_;
    int n_;
    SquareSymmetry sym_;
    int a_ = 0, b_ = 0;
    long long next_ = 0;
};

// Expected saved fraction of the wedge from a normalized start (x, y).
inline double wedgeSavedFraction(double x, double y) { return (0.5 - y) * (0.5 - y) + x + y; }

// Free neighbors of active fires, most free neighbors first.
class GreedyBaseline : public Strategy {
public:
    std::string name() const override { return "greedy"; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyBaseline>(*this); }

    std::vector<Vertex> decide(const GameState& s, int) override {
        const Lattice& lat = s.lattice();
        std::vector<std::pair<int, Vertex>> cand;
        for (Vertex v : s.activeFires())
            lat.forEachNeighbor(v, [&](Vertex u) {
                if (!lat.contains(u) || !s.isFree(u)) return;
                int deg = 0;
                lat.forEachNeighbor(u, [&](Vertex w) {
                    if (s.isFree(w)) ++deg;
                });
                cand.push_back({-deg, u});
            });
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<Vertex> out;
        for (auto& [d, u] : cand) {
            if (static_cast<int>(out.size()) >= s.budgetRemaining()) break;
            out.push_back(u);
        }
        return out;
    }
};

}  // namespace firegrid

#endif
