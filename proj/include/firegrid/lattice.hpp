#ifndef FIREGRID_LATTICE_HPP
#define FIREGRID_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "firegrid/vertex.hpp"

namespace firegrid {

// Brick-wall hexagonal coordinates. (a,b) is "even" when a+b is even;
// even vertices have their vertical edge upward, odd ones downward.
namespace hex {

inline bool isEven(Vertex v) { return ((v.a + v.b) & 1) == 0; }

// distance from the even origin
inline int distanceFromOrigin(Vertex v) {
    int a = v.a, b = v.b;
    if (b == 0) return std::abs(a);
    int h = b > 0 ? std::max(std::abs(a), b - 1) : std::max(std::abs(a), -b);
    if (((h - a) & 1) != 0) ++h;
    return std::abs(b) + h;
}

// Local coordinates around any vertex: translation for even origins,
// point reflection for odd ones. Both are graph isomorphisms onto the
// even-origin picture.
inline Vertex toLocal(Vertex origin, Vertex v) {
    Vertex d = v - origin;
    return isEven(origin) ? d : -d;
}

inline Vertex toGlobal(Vertex origin, Vertex local) {
    return isEven(origin) ? origin + local : origin - local;
}

inline int distance(Vertex u, Vertex v) { return distanceFromOrigin(toLocal(u, v)); }

// rotation by 120 degrees counterclockwise about the even origin
inline Vertex rotate120(Vertex v) {
    if (isEven(v)) return {-(v.a + 3 * v.b) / 2, (v.a - v.b) / 2};
    Vertex e = rotate120(Vertex{v.a, v.b - 1});
    return {e.a - 1, e.b};
}

inline Vertex rotate(Vertex v, int k) {
    k = ((k % 3) + 3) % 3;
    for (int i = 0; i < k; ++i) v = rotate120(v);
    return v;
}

inline Vertex mirror(Vertex v) { return {-v.a, v.b}; }

// planar position; even-sublattice translations (2,0),(1,1) become
// vectors of length sqrt(3) at 60 degrees
inline std::pair<double, double> position(Vertex v) {
    double x = v.a * std::numbers::sqrt3 / 2.0;
    double y = 1.5 * v.b - (isEven(v) ? 0.0 : 0.5);
    return {x, y};
}

}  // namespace hex

// Axial triangular coordinates.
namespace tri {

inline int distanceFromOrigin(Vertex v) {
    return (std::abs(v.a) + std::abs(v.b) + std::abs(v.a + v.b)) / 2;
}

inline int distance(Vertex u, Vertex v) { return distanceFromOrigin(v - u); }

// clockwise by 60 degrees
inline Vertex rotateCw60(Vertex v) { return {v.a + v.b, -v.a}; }
inline Vertex rotateCcw60(Vertex v) { return {-v.b, v.a + v.b}; }

inline std::pair<double, double> position(Vertex v) {
    return {v.a + 0.5 * v.b, v.b * std::numbers::sqrt3 / 2.0};
}

}  // namespace tri

enum class Kind { FiniteSquare, InfiniteSquare, Hexagonal, Triangular, DaryTree, Path, Clique };

inline std::string kindName(Kind k) {
    switch (k) {
        case Kind::FiniteSquare: return "square";
        case Kind::InfiniteSquare: return "infinite_square";
        case Kind::Hexagonal: return "hex";
        case Kind::Triangular: return "tri";
        case Kind::DaryTree: return "tree";
        case Kind::Path: return "path";
        case Kind::Clique: return "clique";
    }
    return "?";
}

enum class FrontDir { NE, NW, SE, SW };

class Lattice {
public:
    static Lattice finiteSquare(int n) {
        if (n < 1) throw DomainError("InvalidLattice", "square size must be >= 1, got " + std::to_string(n));
        return Lattice(Kind::FiniteSquare, n, 0, 0);
    }
    static Lattice infiniteSquare(int window) { return windowed(Kind::InfiniteSquare, window); }
    static Lattice hexagonal(int window) { return windowed(Kind::Hexagonal, window); }
    static Lattice triangular(int window) { return windowed(Kind::Triangular, window); }
    static Lattice path(int n) {
        if (n < 1) throw DomainError("InvalidLattice", "path length must be >= 1");
        return Lattice(Kind::Path, n, 0, 0);
    }
    static Lattice clique(int n) {
        if (n < 1) throw DomainError("InvalidLattice", "clique size must be >= 1");
        return Lattice(Kind::Clique, n, 0, 0);
    }
    // d-ary tree: the root has d children, every other vertex d children and
    // one parent. depth bounds the window.
    static Lattice daryTree(int d, int depth) {
        if (d < 1 || depth < 0) throw DomainError("InvalidLattice", "tree needs d >= 1 and depth >= 0");
        double total = 0, level = 1;
        for (int k = 0; k <= depth; ++k) total += level, level *= d;
        if (total > 5e7) throw DomainError("WindowTooLarge", "tree window has " + std::to_string(total) + " vertices");
        return Lattice(Kind::DaryTree, 0, depth, d);
    }

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int window() const { return window_; }
    int arity() const { return arity_; }
    bool isFinite() const {
        return kind_ == Kind::FiniteSquare || kind_ == Kind::Path || kind_ == Kind::Clique;
    }
    bool isSquare() const { return kind_ == Kind::FiniteSquare || kind_ == Kind::InfiniteSquare; }

    int lo() const { return -(n_ / 2); }
    int hi() const { return (n_ + 1) / 2 - 1; }

    int maxDegree() const {
        switch (kind_) {
            case Kind::FiniteSquare:
            case Kind::InfiniteSquare: return 4;
            case Kind::Hexagonal: return 3;
            case Kind::Triangular: return 6;
            case Kind::DaryTree: return arity_ + 1;
            case Kind::Path: return n_ > 2 ? 2 : n_ - 1;
            case Kind::Clique: return n_ - 1;
        }
        return 0;
    }

    bool contains(Vertex v) const {
        switch (kind_) {
            case Kind::FiniteSquare: return v.a >= lo() && v.a <= hi() && v.b >= lo() && v.b <= hi();
            case Kind::Path:
            case Kind::Clique: return v.b == 0 && v.a >= 0 && v.a < n_;
            case Kind::DaryTree: return v.a >= 0 && v.a <= window_ && v.b >= 0 && v.b < levelSize(v.a);
            default: return distanceFromOrigin(v) <= window_;
        }
    }

    void check(Vertex v) const {
        if (contains(v)) return;
        std::string what = isFinite() || kind_ == Kind::DaryTree ? "InvalidVertex" : "WindowExceeded";
        std::string coord = "a=" + std::to_string(v.a);
        if (isFinite() && (v.a >= lo() && v.a <= hi())) coord = "b=" + std::to_string(v.b);
        throw DomainError(what, "vertex " + toString(v) + " is not in " + describe() + " (offending " + coord + ")");
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::FiniteSquare: return "square n=" + std::to_string(n_);
            case Kind::Path: return "path n=" + std::to_string(n_);
            case Kind::Clique: return "clique n=" + std::to_string(n_);
            case Kind::DaryTree:
                return "tree d=" + std::to_string(arity_) + " depth=" + std::to_string(window_);
            default: return kindName(kind_) + " window=" + std::to_string(window_);
        }
    }

    // All graph neighbors, including ones outside the window of an infinite
    // lattice (callers check contains()).
    template <class F>
    void forEachNeighbor(Vertex v, F&& f) const {
        switch (kind_) {
            case Kind::FiniteSquare: {
                if (v.a > lo()) f(Vertex{v.a - 1, v.b});
                if (v.a < hi()) f(Vertex{v.a + 1, v.b});
                if (v.b > lo()) f(Vertex{v.a, v.b - 1});
                if (v.b < hi()) f(Vertex{v.a, v.b + 1});
                break;
            }
            case Kind::InfiniteSquare:
                f(Vertex{v.a - 1, v.b});
                f(Vertex{v.a + 1, v.b});
                f(Vertex{v.a, v.b - 1});
                f(Vertex{v.a, v.b + 1});
                break;
            case Kind::Hexagonal:
                f(Vertex{v.a - 1, v.b});
                f(Vertex{v.a + 1, v.b});
                f(Vertex{v.a, hex::isEven(v) ? v.b + 1 : v.b - 1});
                break;
            case Kind::Triangular:
                f(Vertex{v.a - 1, v.b});
                f(Vertex{v.a + 1, v.b});
                f(Vertex{v.a, v.b - 1});
                f(Vertex{v.a, v.b + 1});
                f(Vertex{v.a + 1, v.b - 1});
                f(Vertex{v.a - 1, v.b + 1});
                break;
            case Kind::Path:
                if (v.a > 0) f(Vertex{v.a - 1, 0});
                if (v.a + 1 < n_) f(Vertex{v.a + 1, 0});
                break;
            case Kind::Clique:
                for (int i = 0; i < n_; ++i)
                    if (i != v.a) f(Vertex{i, 0});
                break;
            case Kind::DaryTree:
                if (v.a > 0) f(Vertex{v.a - 1, v.b / arity_});
                for (int j = 0; j < arity_; ++j) f(Vertex{v.a + 1, v.b * arity_ + j});
                break;
        }
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        check(v);
        std::vector<Vertex> out;
        forEachNeighbor(v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    int distance(Vertex u, Vertex v) const {
        switch (kind_) {
            case Kind::FiniteSquare:
            case Kind::InfiniteSquare: return std::abs(u.a - v.a) + std::abs(u.b - v.b);
            case Kind::Hexagonal: return hex::distance(u, v);
            case Kind::Triangular: return tri::distance(u, v);
            case Kind::Path: return std::abs(u.a - v.a);
            case Kind::Clique: return u == v ? 0 : 1;
            case Kind::DaryTree: {
                int d = 0;
                while (u.a > v.a) u = {u.a - 1, u.b / arity_}, ++d;
                while (v.a > u.a) v = {v.a - 1, v.b / arity_}, ++d;
                while (u != v) u = {u.a - 1, u.b / arity_}, v = {v.a - 1, v.b / arity_}, d += 2;
                return d;
            }
        }
        return 0;
    }

    int distanceFromOrigin(Vertex v) const {
        switch (kind_) {
            case Kind::InfiniteSquare: return std::abs(v.a) + std::abs(v.b);
            case Kind::Hexagonal: return hex::distanceFromOrigin(v);
            case Kind::Triangular: return tri::distanceFromOrigin(v);
            default: return distance(Vertex{0, 0}, v);
        }
    }

    std::vector<Vertex> sphere(Vertex v, int r) const {
        check(v);
        if (r < 0) throw DomainError("InvalidRadius", "radius must be >= 0");
        requireWindow(v, r);
        std::vector<Vertex> out;
        if (r == 0) return {v};
        switch (kind_) {
            case Kind::FiniteSquare:
            case Kind::InfiniteSquare:
                for (int dx = -r; dx <= r; ++dx) {
                    int dy = r - std::abs(dx);
                    Vertex p{v.a + dx, v.b + dy}, q{v.a + dx, v.b - dy};
                    if (contains(p)) out.push_back(p);
                    if (dy != 0 && contains(q)) out.push_back(q);
                }
                break;
            case Kind::Hexagonal:
            case Kind::Triangular:
                for (int da = -r; da <= r; ++da)
                    for (int db = -r; db <= r; ++db) {
                        Vertex u{v.a + da, v.b + db};
                        if (distance(v, u) == r) out.push_back(u);
                    }
                break;
            default: {
                for (auto& [u, d] : bfs(v, r))
                    if (d == r) out.push_back(u);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> ball(Vertex v, int t) const {
        std::vector<Vertex> out;
        for (int r = 0; r <= t; ++r) {
            auto s = sphere(v, r);
            out.insert(out.end(), s.begin(), s.end());
        }
        return out;
    }

    // Number of vertices of the sphere without materializing it (square kinds).
    long long sphereSize(Vertex v, int r) const {
        if (!isSquare()) return static_cast<long long>(sphere(v, r).size());
        check(v);
        requireWindow(v, r);
        if (r == 0) return 1;
        long long c = 0;
        int alo = kind_ == Kind::FiniteSquare ? std::max(lo(), v.a - r) : v.a - r;
        int ahi = kind_ == Kind::FiniteSquare ? std::min(hi(), v.a + r) : v.a + r;
        for (int a = alo; a <= ahi; ++a) {
            int dy = r - std::abs(a - v.a);
            if (contains(Vertex{a, v.b + dy})) ++c;
            if (dy != 0 && contains(Vertex{a, v.b - dy})) ++c;
        }
        return c;
    }

    // Cone ids 1..6 around the apex: cone j is the sector between the
    // boundary rays at 60(j-1) and 60j degrees. On the hexagonal lattice
    // angles are measured in the apex's local frame rotated back for odd
    // apexes, so ids keep their geometric direction.
    std::vector<int> coneOf(Vertex apex, Vertex v) const {
        if (kind_ != Kind::Hexagonal && kind_ != Kind::Triangular)
            throw DomainError("UnsupportedLattice", "cones exist only on hex and tri lattices");
        check(apex);
        if (v == apex) return {1, 2, 3, 4, 5, 6};
        std::vector<int> out;
        if (kind_ == Kind::Triangular) {
            Vertex d = v - apex;
            static const Vertex dirs[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
            for (int j = 0; j < 6; ++j) {
                int k = tri::distanceFromOrigin(d);
                if (d == Vertex{dirs[j].a * k, dirs[j].b * k}) {
                    out = {j == 0 ? 6 : j, j + 1};
                    std::sort(out.begin(), out.end());
                    return out;
                }
            }
            auto [x, y] = tri::position(d);
            return {sectorOf(x, y)};
        }
        Vertex d = hex::toLocal(apex, v);
        int shift = hex::isEven(apex) ? 0 : 3;
        // boundary rays in the even-origin frame: (k,0) at 0 degrees and the
        // staircase (k,k),(k+1,k) at 60 degrees, then their 120-degree turns
        for (int k = 0; k < 3; ++k) {
            Vertex w = hex::rotate(d, -k);
            if (w.b == 0 && w.a > 0) out.push_back(2 * k);
            if (w.b >= 0 && (w.a == w.b || w.a == w.b + 1) && w.a > 0) out.push_back(2 * k + 1);
        }
        if (!out.empty()) {
            std::vector<int> ids;
            for (int ray : out) {
                ids.push_back((ray + shift) % 6 + 1);
                ids.push_back((ray + shift + 5) % 6 + 1);
            }
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            return ids;
        }
        auto [x, y] = hex::position(d);
        return {(sectorOf(x, y) - 1 + shift) % 6 + 1};
    }

    std::vector<Vertex> fireFront(Vertex c, FrontDir dir, int r) const {
        if (kind_ != Kind::FiniteSquare) throw DomainError("UnsupportedLattice", "fire fronts need a finite square grid");
        check(c);
        int sx = (dir == FrontDir::NE || dir == FrontDir::SE) ? 1 : -1;
        int sy = (dir == FrontDir::NE || dir == FrontDir::NW) ? 1 : -1;
        std::vector<Vertex> out;
        for (int s = 0; s <= r; ++s) {
            Vertex u{c.a + sx * s, c.b + sy * (r - s)};
            if (contains(u)) out.push_back(u);
        }
        return out;
    }

    // Dense indexing over the finite vertex set or the window box.
    std::size_t indexCount() const {
        switch (kind_) {
            case Kind::FiniteSquare: return static_cast<std::size_t>(n_) * n_;
            case Kind::Path:
            case Kind::Clique: return static_cast<std::size_t>(n_);
            case Kind::DaryTree: return static_cast<std::size_t>(levelOffset(window_ + 1));
            default: return static_cast<std::size_t>(2 * window_ + 1) * (2 * window_ + 1);
        }
    }

    std::size_t index(Vertex v) const {
        switch (kind_) {
            case Kind::FiniteSquare: return static_cast<std::size_t>(v.a - lo()) * n_ + (v.b - lo());
            case Kind::Path:
            case Kind::Clique: return static_cast<std::size_t>(v.a);
            case Kind::DaryTree: return static_cast<std::size_t>(levelOffset(v.a) + v.b);
            default:
                return static_cast<std::size_t>(v.a + window_) * (2 * window_ + 1) + (v.b + window_);
        }
    }

    Vertex vertexAt(std::size_t i) const {
        switch (kind_) {
            case Kind::FiniteSquare:
                return {static_cast<int>(i / n_) + lo(), static_cast<int>(i % n_) + lo()};
            case Kind::Path:
            case Kind::Clique: return {static_cast<int>(i), 0};
            case Kind::DaryTree: {
                int k = 0;
                while (levelOffset(k + 1) <= static_cast<long long>(i)) ++k;
                return {k, static_cast<int>(i - levelOffset(k))};
            }
            default: {
                int w = 2 * window_ + 1;
                return {static_cast<int>(i / w) - window_, static_cast<int>(i % w) - window_};
            }
        }
    }

    // every vertex (of the window, for infinite kinds), in index order
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < indexCount(); ++i) {
            Vertex v = vertexAt(i);
            if (contains(v)) out.push_back(v);
        }
        return out;
    }

    std::unordered_map<Vertex, int, VertexHash> bfs(Vertex s, int maxR) const {
        std::unordered_map<Vertex, int, VertexHash> d{{s, 0}};
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            if (d[v] >= maxR) continue;
            forEachNeighbor(v, [&](Vertex u) {
                if (!contains(u) || d.count(u)) return;
                d[u] = d[v] + 1;
                q.push_back(u);
            });
        }
        return d;
    }

    friend bool operator==(const Lattice& x, const Lattice& y) {
        return x.kind_ == y.kind_ && x.n_ == y.n_ && x.window_ == y.window_ && x.arity_ == y.arity_;
    }

private:
    Lattice(Kind k, int n, int window, int arity) : kind_(k), n_(n), window_(window), arity_(arity) {}

    static Lattice windowed(Kind k, int window) {
        if (window < 0) throw DomainError("InvalidLattice", "window must be >= 0");
        if (window > 20000) throw DomainError("WindowTooLarge", "window " + std::to_string(window) + " exceeds 20000");
        return Lattice(k, 0, window, 0);
    }

    long long levelSize(int k) const {
        long long s = 1;
        for (int i = 0; i < k; ++i) s *= arity_;
        return s;
    }
    long long levelOffset(int k) const {
        long long s = 0;
        for (int i = 0; i < k; ++i) s += levelSize(i);
        return s;
    }

    void requireWindow(Vertex v, int r) const {
        if (isFinite()) return;
        int reach = kind_ == Kind::DaryTree ? v.a + r : distanceFromOrigin(v) + r;
        if (reach > window_)
            throw DomainError("WindowExceeded", "radius " + std::to_string(r) + " around " + toString(v) +
                                                    " leaves " + describe());
    }

    static int sectorOf(double x, double y) {
        double ang = std::atan2(y, x) * 180.0 / std::numbers::pi;
        if (ang < 0) ang += 360.0;
        int s = static_cast<int>(ang / 60.0);
        return std::min(s, 5) + 1;
    }

    Kind kind_;
    int n_;
    int window_;
    int arity_;
};

}  // namespace firegrid

#endif
