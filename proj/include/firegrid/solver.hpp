#ifndef FIREGRID_SOLVER_HPP
#define FIREGRID_SOLVER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/rational.hpp>

#include "firegrid/engine.hpp"

namespace firegrid {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    template <class F>
    void forEach(F&& f) const {
        for (int k = 0; k < W; ++k)
            for (std::uint64_t x = w[k]; x; x &= x - 1) f(k * 64 + std::countr_zero(x));
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (int k = 0; k < W; ++k) r.w[k] = w[k] | o.w[k];
        return r;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        for (int k = 0; k < W; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    Bits minus(const Bits& o) const {
        Bits r;
        for (int k = 0; k < W; ++k) r.w[k] = w[k] & ~o.w[k];
        return r;
    }
    friend bool operator==(const Bits&, const Bits&) = default;
    friend auto operator<=>(const Bits&, const Bits&) = default;
};

template <int W>
struct BitsPairHash {
    std::size_t operator()(const std::pair<Bits<W>, Bits<W>>& p) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (auto x : p.first.w) mix(x);
        for (auto x : p.second.w) mix(x * 0xff51afd7ed558ccdULL);
        return static_cast<std::size_t>(h);
    }
};

// Explicit finite graph over the vertices of a lattice (or of its window).
struct IndexedGraph {
    Lattice lat;
    std::vector<Vertex> verts;
    std::unordered_map<Vertex, int, VertexHash> id;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> symmetries;  // vertex permutations, identity first

    explicit IndexedGraph(const Lattice& l, bool useSymmetry = true) : lat(l) {
        verts = lat.vertices();
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) id[verts[i]] = i;
        adj.resize(verts.size());
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            lat.forEachNeighbor(verts[i], [&](Vertex u) {
                auto it = id.find(u);
                if (it != id.end()) adj[i].push_back(it->second);
            });
        std::vector<int> ident(verts.size());
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) ident[i] = i;
        symmetries.push_back(ident);
        if (useSymmetry) buildSymmetries();
    }

    int size() const { return static_cast<int>(verts.size()); }

private:
    void addMap(const std::function<Vertex(Vertex)>& g) {
        std::vector<int> p(verts.size());
        for (int i = 0; i < size(); ++i) {
            auto it = id.find(g(verts[i]));
            if (it == id.end()) return;
            p[i] = it->second;
        }
        for (int i = 0; i < size(); ++i) {
            bool ok = true;
            for (int j : adj[i])
                if (std::find(adj[p[i]].begin(), adj[p[i]].end(), p[j]) == adj[p[i]].end()) ok = false;
            if (!ok) return;
        }
        if (std::find(symmetries.begin(), symmetries.end(), p) == symmetries.end()) symmetries.push_back(p);
    }

    void buildSymmetries() {
        switch (lat.kind()) {
            case Kind::FiniteSquare:
            case Kind::InfiniteSquare: {
                int n = lat.kind() == Kind::FiniteSquare ? lat.n() : 0;
                auto r = [n](int x) { return (n > 0 && n % 2 == 0) ? -1 - x : -x; };
                for (int m = 1; m < 8; ++m)
                    addMap([=](Vertex v) {
                        if (m & 1) v.a = r(v.a);
                        if (m & 2) v.b = r(v.b);
                        if (m & 4) std::swap(v.a, v.b);
                        return v;
                    });
                break;
            }
            case Kind::Triangular:
                for (int m = 1; m < 12; ++m)
                    addMap([=](Vertex v) {
                        if (m >= 6) std::swap(v.a, v.b);
                        for (int i = 0; i < m % 6; ++i) v = tri::rotateCcw60(v);
                        return v;
                    });
                break;
            case Kind::Hexagonal:
                for (int m = 1; m < 6; ++m)
                    addMap([=](Vertex v) {
                        if (m >= 3) v = hex::mirror(v);
                        return hex::rotate(v, m % 3);
                    });
                break;
            case Kind::Path: addMap([n = lat.n()](Vertex v) { return Vertex{n - 1 - v.a, 0}; }); break;
            default: break;
        }
    }
};

struct SolveOptions {
    int cap = 64;
    int maxDepth = 1 << 20;
    bool symmetry = true;
    bool restrictFrontier = true;
    int firstTurnBudget = -1;  // overrides the budget of the next turn (mid-turn hints)
};

struct SolveResult {
    long long sn = 0;
    std::vector<std::vector<Vertex>> optimalSequence;
    long long nodesExpanded = 0;
    bool proved = true;
};

namespace detail {

template <int W>
class OptimalSearch {
public:
    using B = Bits<W>;

    OptimalSearch(const IndexedGraph& g, const BudgetSchedule& sched, const SolveOptions& opt)
        : g_(g), sched_(sched), opt_(opt) {
        nb_.resize(g.size());
        for (int i = 0; i < g.size(); ++i)
            for (int j : g.adj[i]) nb_[i].set(j);
    }

    B neighborsOf(const B& x) const {
        B r;
        x.forEach([&](int i) { r = r | nb_[i]; });
        return r;
    }

    B reach(const B& from, const B& within) const {
        B seen, frontier = neighborsOf(from) & within;
        while (frontier.any()) {
            seen = seen | frontier;
            frontier = neighborsOf(frontier) & within.minus(seen);
        }
        return seen;
    }

    int budget(int t) const {
        if (t == startTurn_ + 1 && opt_.firstTurnBudget >= 0) return opt_.firstTurnBudget;
        return sched_.budget(t);
    }

    // minimal number of further burnt vertices; fail-soft against beta
    int search(const B& bf, const B& r, int t, int beta, bool restricted) {
        ++nodes_;
        B F = neighborsOf(bf) & r;
        if (!F.any()) return 0;
        int k = budget(t + 1);
        if (r.count() <= k) return 0;
        if (t - startTurn_ >= opt_.maxDepth) {
            cutoff_ = true;
            return r.count();
        }
        int lb = std::max(0, F.count() - k);
        if (lb >= beta) return lb;
        auto key = canonical(bf, r, t);
        auto& tt = restricted ? ttR_ : ttF_;
        if (auto it = tt.find(key); it != tt.end()) {
            if (it->second.exact) return it->second.value;
            if (it->second.value >= beta) return it->second.value;
            lb = std::max(lb, it->second.value);
        }
        int best = INT_MAX;
        forEachMove(bf, r, F, k, restricted, [&](const B& s) {
            B burn = F.minus(s);
            int now = burn.count();
            int v = now;
            if (now > 0) {
                B rr = reach(burn, r.minus(s).minus(burn));
                if (rr.any()) {
                    B bf2 = burn & neighborsOf(rr);
                    v += search(bf2, rr, t + 1, std::min(beta, best) - now, restricted);
                }
            }
            best = std::min(best, v);
            return best > lb && best > 0;  // continue while improvement is possible
        });
        best = std::max(best, lb);
        tt[key] = Entry{best, best < beta};
        return best;
    }

    template <class F>
    void forEachMove(const B& bf, const B& r, const B& front, int k, bool restricted, F&& f) {
        std::vector<int> cand;
        front.forEach([&](int i) { cand.push_back(i); });
        B rest = restricted ? (neighborsOf(front) & r).minus(front) : r.minus(front);
        rest.forEach([&](int i) { cand.push_back(i); });
        (void)bf;
        int m = std::min<int>(k, static_cast<int>(cand.size()));
        if (m == 0) {
            f(B{});
            return;
        }
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        int n = static_cast<int>(cand.size());
        for (;;) {
            B s;
            for (int i : idx) s.set(cand[i]);
            if (!f(s)) return;
            int i = m - 1;
            while (i >= 0 && idx[i] == n - m + i) --i;
            if (i < 0) return;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    int solveRoot(const B& bf, const B& r, int t) {
        startTurn_ = t;
        int v = INT_MAX;
        if (opt_.restrictFrontier) v = search(bf, r, t, INT_MAX, true);
        int full = search(bf, r, t, v == INT_MAX ? INT_MAX : v, false);
        return std::min(v, full);
    }

    // rebuild a move sequence achieving value v from this node
    void witness(B bf, B r, int t, int v, std::vector<std::vector<Vertex>>& out) {
        for (;;) {
            B F = neighborsOf(bf) & r;
            int k = budget(t + 1);
            if (!F.any()) return;
            if (r.count() <= k) {
                std::vector<Vertex> mv;
                r.forEach([&](int i) { mv.push_back(g_.verts[i]); });
                out.push_back(mv);
                return;
            }
            std::optional<std::pair<B, std::pair<B, B>>> pick;
            int pickNow = 0;
            forEachMove(bf, r, F, k, false, [&](const B& s) {
                B burn = F.minus(s);
                int now = burn.count();
                int c = now;
                B rr, bf2;
                if (now > 0) {
                    rr = reach(burn, r.minus(s).minus(burn));
                    bf2 = burn & neighborsOf(rr);
                    if (rr.any()) c += search(bf2, rr, t + 1, v - now + 1, false);
                }
                if (c == v) {
                    pick = {s, {bf2, rr}};
                    pickNow = now;
                    return false;
                }
                return true;
            });
            if (!pick) throw DomainError("SolverInternal", "witness reconstruction failed");
            std::vector<Vertex> mv;
            pick->first.forEach([&](int i) { mv.push_back(g_.verts[i]); });
            std::sort(mv.begin(), mv.end());
            out.push_back(mv);
            if (pickNow == 0) return;
            v -= pickNow;
            bf = pick->second.first;
            r = pick->second.second;
            ++t;
            if (!r.any()) return;
        }
    }

    long long nodes() const { return nodes_; }
    bool cutoff() const { return cutoff_; }

private:
    struct Entry {
        int value;
        bool exact;
    };
    struct Key {
        B bf, r;
        int t;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return BitsPairHash<W>{}({k.bf, k.r}) ^ static_cast<std::size_t>(k.t) * 0x9e3779b97f4a7c15ULL;
        }
    };

    Key canonical(const B& bf, const B& r, int t) const {
        int tk = sched_.uniformFrom(t + 1) && !(opt_.firstTurnBudget >= 0 && t == startTurn_) ? -1 : t;
        Key best{bf, r, tk};
        if (!opt_.symmetry) return best;
        for (std::size_t m = 1; m < g_.symmetries.size(); ++m) {
            const auto& p = g_.symmetries[m];
            B a, b;
            bf.forEach([&](int i) { a.set(p[i]); });
            r.forEach([&](int i) { b.set(p[i]); });
            if (std::tie(a, b) < std::tie(best.bf, best.r)) best.bf = a, best.r = b;
        }
        return best;
    }

    const IndexedGraph& g_;
    BudgetSchedule sched_;
    SolveOptions opt_;
    std::vector<B> nb_;
    std::unordered_map<Key, Entry, KeyHash> ttR_, ttF_;
    long long nodes_ = 0;
    bool cutoff_ = false;
    int startTurn_ = 0;
};

template <int W>
SolveResult solveWith(const IndexedGraph& g, const std::vector<Vertex>& burning, const std::vector<Vertex>& prot,
                      const BudgetSchedule& sched, int turn, const SolveOptions& opt) {
    OptimalSearch<W> s(g, sched, opt);
    Bits<W> b, p;
    for (Vertex v : burning) b.set(g.id.at(v));
    for (Vertex v : prot) p.set(g.id.at(v));
    Bits<W> all;
    for (int i = 0; i < g.size(); ++i) all.set(i);
    Bits<W> r = s.reach(b, all.minus(b).minus(p));
    Bits<W> bf = b & s.neighborsOf(r);
    SolveResult out;
    int extra = r.any() ? s.solveRoot(bf, r, turn) : 0;
    out.sn = g.size() - b.count() - extra;
    out.proved = !s.cutoff();
    if (r.any() && out.proved) s.witness(bf, r, turn, extra, out.optimalSequence);
    out.nodesExpanded = s.nodes();
    return out;
}

}  // namespace detail

// Best savable count from an arbitrary position (burning, protected, turn).
inline SolveResult solvePosition(const Lattice& lat, const std::vector<Vertex>& burning,
                                 const std::vector<Vertex>& prot, const BudgetSchedule& sched, int turn,
                                 const SolveOptions& opt = {}) {
    IndexedGraph g(lat, opt.symmetry);
    if (g.size() > opt.cap)
        throw DomainError("CapExceeded", "instance has " + std::to_string(g.size()) + " vertices, cap is " +
                                             std::to_string(opt.cap));
    if (g.size() <= 64) return detail::solveWith<1>(g, burning, prot, sched, turn, opt);
    if (g.size() <= 128) return detail::solveWith<2>(g, burning, prot, sched, turn, opt);
    if (g.size() <= 256) return detail::solveWith<4>(g, burning, prot, sched, turn, opt);
    if (g.size() <= 512) return detail::solveWith<8>(g, burning, prot, sched, turn, opt);
    throw DomainError("CapExceeded", "solver supports at most 512 vertices");
}

inline SolveResult solveOptimal(const Lattice& lat, const std::vector<Vertex>& fires, const BudgetSchedule& sched,
                                const SolveOptions& opt = {}) {
    if (fires.empty()) throw DomainError("EmptyFires", "at least one initial fire is required");
    for (Vertex v : fires) lat.check(v);
    return solvePosition(lat, fires, {}, sched, 0, opt);
}

using Rational = boost::rational<long long>;

inline Rational survivingRateExact(const Lattice& lat, const SolveOptions& opt = {}) {
    if (!lat.isFinite()) throw DomainError("UnsupportedLattice", "surviving rate needs a finite lattice");
    auto vs = lat.vertices();
    long long n = static_cast<long long>(vs.size());
    long long total = 0;
    for (Vertex v : vs) total += solveOptimal(lat, {v}, BudgetSchedule{1, {}}, opt).sn;
    return Rational(total, n * n);
}

// Plain enumeration of every legal protection sequence with full budget
// use. No pruning, no tables; kept as an independent oracle.
inline long long exhaustiveSn(const Lattice& lat, Vertex fire, const BudgetSchedule& sched) {
    std::function<long long(GameState&)> rec = [&](GameState& s) -> long long {
        if (s.isContained()) return static_cast<long long>(s.lattice().indexCount() - s.burning().size());
        std::vector<Vertex> freeV;
        for (Vertex v : s.lattice().vertices())
            if (s.isFree(v)) freeV.push_back(v);
        int k = std::min<int>(s.budgetRemaining(), static_cast<int>(freeV.size()));
        long long best = -1;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        int n = static_cast<int>(freeV.size());
        for (;;) {
            GameState c = s;
            std::vector<Vertex> mv;
            for (int i : idx) mv.push_back(freeV[i]);
            c.protect(mv);
            c.spread();
            best = std::max(best, rec(c));
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return best;
    };
    GameState s(lat, {fire}, sched);
    return rec(s);
}

struct ContainmentOptions {
    bool symmetry = true;
    bool exhaustive = true;      // widen to every window vertex when the restricted search fails
    int witnessLimit = 1;        // collect up to this many distinct witnesses
    long long nodeLimit = 200000000;
};

struct ContainmentResult {
    bool containable = false;
    std::vector<std::vector<Vertex>> witness;
    std::vector<std::vector<std::vector<Vertex>>> witnesses;
    long long nodesExpanded = 0;
    bool exhaustive = false;
};

namespace detail {

template <int W>
class ContainSearch {
public:
    using B = Bits<W>;
    ContainSearch(const IndexedGraph& g, const BudgetSchedule& sched, int maxTurns, const ContainmentOptions& opt)
        : g_(g), sched_(sched), maxTurns_(maxTurns), opt_(opt) {
        nb_.resize(g.size());
        for (int i = 0; i < g.size(); ++i)
            for (int j : g.adj[i]) nb_[i].set(j);
        square_ = g.lat.isSquare();
    }

    B neighborsOf(const B& x) const {
        B r;
        x.forEach([&](int i) { r = r | nb_[i]; });
        return r;
    }

    // Every finite set of rows x cols extent in Z^2 has at least
    // max(2 rows + 2, 2 cols + 2) outer boundary vertices, all of which must
    // be protected when the fire stops.
    bool boundaryPrunes(const B& burn, int nProt, int t) const {
        if (!square_) return false;
        int a0 = INT_MAX, a1 = INT_MIN, b0 = INT_MAX, b1 = INT_MIN;
        burn.forEach([&](int i) {
            Vertex v = g_.verts[i];
            a0 = std::min(a0, v.a), a1 = std::max(a1, v.a), b0 = std::min(b0, v.b), b1 = std::max(b1, v.b);
        });
        int cols = a1 - a0 + 1, rows = b1 - b0 + 1;
        long long size = burn.count();
        long long avail = nProt;
        for (int T = t + 1; T <= maxTurns_; ++T) {
            avail += sched_.budget(T);
            // fire grows by at least one vertex per spread before it stops
            long long need = size + std::max(0, T - t - 1);
            int bestBoundary = INT_MAX;
            for (int r = rows; r <= rows + 64; ++r) {
                int c = std::max<long long>(cols, (need + r - 1) / r);
                bestBoundary = std::min(bestBoundary, std::max(2 * r + 2, 2 * c + 2));
                if (2 * r + 2 >= bestBoundary) break;
            }
            if (bestBoundary <= avail) return false;
        }
        return true;
    }

    bool search(const B& burn, const B& front, const B& prot, int t, bool restricted,
                std::vector<std::vector<Vertex>>& path) {
        if (++nodes_ > opt_.nodeLimit) throw DomainError("CapExceeded", "containment search node limit reached");
        B F = neighborsOf(front).minus(burn).minus(prot);
        if (!F.any()) {
            if (std::find(found_.begin(), found_.end(), path) == found_.end()) found_.push_back(path);
            return static_cast<int>(found_.size()) >= opt_.witnessLimit;
        }
        if (t >= maxTurns_) return false;
        int k = sched_.budget(t + 1);
        if (t == maxTurns_ - 1) {
            // last turn: only protecting all of F can work
            if (F.count() > k) return false;
            std::vector<Vertex> mv;
            F.forEach([&](int i) { mv.push_back(g_.verts[i]); });
            path.push_back(mv);
            bool stop = search(burn, B{}, prot | F, t + 1, restricted, path);
            path.pop_back();
            return stop;
        }
        if (boundaryPrunes(burn, prot.count(), t)) return false;
        if (opt_.witnessLimit == 1 && sched_.uniformFrom(t + 1)) {
            auto key = canonical(burn, prot);
            auto it = seen_.find(key);
            if (it != seen_.end() && it->second >= maxTurns_ - t) return false;
            seen_[key] = maxTurns_ - t;
        }
        std::vector<int> cand;
        F.forEach([&](int i) { cand.push_back(i); });
        B outer = restricted ? neighborsOf(F).minus(burn).minus(prot).minus(F) : all_.minus(burn).minus(prot).minus(F);
        outer.forEach([&](int i) { cand.push_back(i); });
        int m = std::min<int>(k, static_cast<int>(cand.size()));
        int n = static_cast<int>(cand.size());
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        for (;;) {
            B s;
            std::vector<Vertex> mv;
            for (int i : idx) s.set(cand[i]), mv.push_back(g_.verts[cand[i]]);
            B p2 = prot | s;
            B nf = F.minus(s);
            // a vertex on the window border may not catch fire
            bool escapes = false;
            nf.forEach([&](int i) {
                if (g_.adj[i].size() < static_cast<std::size_t>(g_.lat.maxDegree())) escapes = true;
            });
            if (!escapes) {
                path.push_back(mv);
                if (search(burn | nf, nf, p2, t + 1, restricted, path)) return true;
                path.pop_back();
            }
            if (m == 0) break;
            int i = m - 1;
            while (i >= 0 && idx[i] == n - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
        return false;
    }

    ContainmentResult run(const std::vector<Vertex>& fires) {
        for (int i = 0; i < g_.size(); ++i) all_.set(i);
        B b;
        for (Vertex v : fires) b.set(g_.id.at(v));
        ContainmentResult res;
        std::vector<std::vector<Vertex>> path;
        // iterative deepening keeps witnesses short and the last-turn cut sharp
        const int limit = maxTurns_;
        for (int T = 1; T <= limit && static_cast<int>(found_.size()) < opt_.witnessLimit; ++T) {
            maxTurns_ = T;
            seen_.clear();
            search(b, b, B{}, 0, true, path);
        }
        if (found_.empty() && opt_.exhaustive) {
            for (int T = 1; T <= limit && found_.empty(); ++T) {
                maxTurns_ = T;
                seen_.clear();
                search(b, b, B{}, 0, false, path);
            }
            res.exhaustive = true;
        }
        maxTurns_ = limit;
        res.containable = !found_.empty();
        if (res.containable) res.witness = found_.front();
        res.witnesses = found_;
        res.nodesExpanded = nodes_;
        return res;
    }

private:
    std::pair<B, B> canonical(const B& x, const B& y) const {
        std::pair<B, B> best{x, y};
        if (!opt_.symmetry) return best;
        for (std::size_t m = 1; m < g_.symmetries.size(); ++m) {
            const auto& p = g_.symmetries[m];
            B a, b;
            x.forEach([&](int i) { a.set(p[i]); });
            y.forEach([&](int i) { b.set(p[i]); });
            if (std::tie(a, b) < std::tie(best.first, best.second)) best = {a, b};
        }
        return best;
    }

    const IndexedGraph& g_;
    BudgetSchedule sched_;
    int maxTurns_;
    ContainmentOptions opt_;
    std::vector<B> nb_;
    B all_;
    bool square_ = false;
    long long nodes_ = 0;
    std::unordered_map<std::pair<B, B>, int, BitsPairHash<W>> seen_;
    std::vector<std::vector<std::vector<Vertex>>> found_;
};

}  // namespace detail

// Is there a protection sequence stopping the fire within maxTurns? The
// first pass only protects vertices within distance two of the fire; when
// it fails and exhaustive is set, a second pass allows every window vertex.
inline ContainmentResult verifyContainmentSearch(const Lattice& lat, const std::vector<Vertex>& fires,
                                                 const BudgetSchedule& sched, int maxTurns,
                                                 const ContainmentOptions& opt = {}) {
    if (lat.isFinite() || lat.kind() == Kind::DaryTree)
        throw DomainError("UnsupportedLattice", "containment search needs a windowed infinite lattice");
    if (lat.window() < maxTurns + 2)
        throw DomainError("WindowTooSmall", "window must be at least maxTurns + 2");
    IndexedGraph g(lat, opt.symmetry);
    int n = g.size();
    if (n <= 64) return detail::ContainSearch<1>(g, sched, maxTurns, opt).run(fires);
    if (n <= 128) return detail::ContainSearch<2>(g, sched, maxTurns, opt).run(fires);
    if (n <= 256) return detail::ContainSearch<4>(g, sched, maxTurns, opt).run(fires);
    if (n <= 512) return detail::ContainSearch<8>(g, sched, maxTurns, opt).run(fires);
    if (n <= 1024) return detail::ContainSearch<16>(g, sched, maxTurns, opt).run(fires);
    throw DomainError("CapExceeded", "window too large for the containment search (" + std::to_string(n) + " vertices)");
}

}  // namespace firegrid

#endif
