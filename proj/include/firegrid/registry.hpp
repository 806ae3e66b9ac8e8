#ifndef FIREGRID_REGISTRY_HPP
#define FIREGRID_REGISTRY_HPP

#include <memory>
#include <string>
#include <vector>

#include "firegrid/io.hpp"
#include "firegrid/strategies/hex.hpp"
#include "firegrid/strategies/random.hpp"
#include "firegrid/strategies/tri.hpp"
#include "firegrid/strategies/wedge.hpp"

namespace firegrid {

struct StrategyInfo {
    std::string name;
    std::vector<std::string> lattices;
    std::string params;
};

inline const std::vector<StrategyInfo>& strategyCatalog() {
    static const std::vector<StrategyInfo> cat{
        {"square_wedge", {"square", "infinite_square"}, "start: [a,b] (default: first fire)"},
        {"hex_two_ray", {"hex"}, "v0: [a,b] (default: first fire)"},
        {"hex_contain", {"hex"}, "t1, t2: extra firefighter turns; v0; strip_factor"},
        {"hex_spiral", {"hex"}, "v0, t0, start (0..5), mirror"},
        {"hex_slowdown", {"hex"}, "none"},
        {"tri_spiral2", {"tri"}, "none; needs base budget 2"},
        {"greedy", {"*"}, "none"},
        {"idle", {"*"}, "none"},
        {"random", {"square", "path", "clique", "tree"}, "seed, near_bias"},
    };
    return cat;
}

struct StrategyRef {
    std::string name;
    json params = json::object();
};

inline StrategyRef strategyRefFrom(const json& j) {
    if (j.is_string()) return {j.get<std::string>(), json::object()};
    if (!j.is_object() || !j.contains("name")) throw DomainError("UnknownStrategy", "strategy needs a name");
    return {j["name"].get<std::string>(), j.value("params", json::object())};
}

// Extra firefighter turns a strategy reference asks for (hex_contain t1/t2).
inline std::vector<int> strategyExtras(const StrategyRef& ref) {
    std::vector<int> out;
    if (ref.name == "hex_contain")
        for (const char* k : {"t1", "t2"})
            if (ref.params.contains(k)) out.push_back(ref.params[k].get<int>());
    return out;
}

inline std::unique_ptr<Strategy> makeStrategy(const StrategyRef& ref, const Lattice& lat,
                                              const std::vector<Vertex>& fires) {
    const json& p = ref.params;
    auto vertexOr = [&](const char* key, Vertex def) { return p.contains(key) ? vertexFrom(p[key]) : def; };
    auto needKind = [&](std::initializer_list<Kind> ks) {
        for (Kind k : ks)
            if (lat.kind() == k) return;
        throw DomainError("UnsupportedLattice", ref.name + " does not run on " + lat.describe());
    };
    Vertex f0 = fires.empty() ? Vertex{0, 0} : fires.front();
    if (ref.name == "square_wedge") {
        needKind({Kind::FiniteSquare, Kind::InfiniteSquare});
        return std::make_unique<SquareWedge>(vertexOr("start", f0), lat.kind() == Kind::FiniteSquare ? lat.n() : 0);
    }
    if (ref.name == "hex_two_ray") {
        needKind({Kind::Hexagonal});
        return std::make_unique<HexTwoRay>(vertexOr("v0", f0));
    }
    if (ref.name == "hex_contain") {
        needKind({Kind::Hexagonal});
        HexContain::Options o;
        o.stripFactor = p.value("strip_factor", o.stripFactor);
        o.spiralStart = p.value("spiral_start", o.spiralStart);
        o.mirror = p.value("mirror", o.mirror);
        o.lookahead = p.value("lookahead", o.lookahead);
        return std::make_unique<HexContain>(vertexOr("v0", f0), o);
    }
    if (ref.name == "hex_spiral") {
        needKind({Kind::Hexagonal});
        return std::make_unique<HexSpiral>(vertexOr("v0", f0), p.value("t0", 0), p.value("start", 0),
                                           p.value("mirror", false));
    }
    if (ref.name == "hex_slowdown") {
        needKind({Kind::Hexagonal});
        return std::make_unique<HexSlowdown>();
    }
    if (ref.name == "tri_spiral2") {
        needKind({Kind::Triangular});
        return std::make_unique<TriSpiral2>();
    }
    if (ref.name == "greedy") return std::make_unique<GreedyBaseline>();
    if (ref.name == "idle") return std::make_unique<IdleStrategy>();
    if (ref.name == "random") {
        if (!lat.isFinite() && lat.kind() != Kind::DaryTree)
            throw DomainError("UnsupportedLattice", "random play needs a finite lattice");
        return std::make_unique<RandomStrategy>(p.value("seed", 0ULL), p.value("near_bias", 0.5));
    }
    throw DomainError("UnknownStrategy", "no strategy named '" + ref.name + "'");
}

inline json catalogJson() {
    json a = json::array();
    for (const auto& s : strategyCatalog()) a.push_back({{"name", s.name}, {"lattices", s.lattices}, {"params", s.params}});
    return a;
}

}  // namespace firegrid

#endif
