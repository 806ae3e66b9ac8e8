#ifndef FIREGRID_IO_HPP
#define FIREGRID_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "firegrid/engine.hpp"
#include "firegrid/solver.hpp"

namespace firegrid {

using json = nlohmann::json;

// Tree vertices are written as root paths "r.i.j..." (child index per level).
inline std::string treePath(const Lattice& lat, Vertex v) {
    std::vector<int> digits;
    for (int d = v.a, i = v.b; d > 0; --d, i /= lat.arity()) digits.push_back(i % lat.arity());
    std::string s = "r";
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += "." + std::to_string(*it);
    return s;
}

inline Vertex treeVertex(const Lattice& lat, const std::string& path) {
    if (path.empty() || path[0] != 'r') throw DomainError("InvalidVertex", "tree path must start with 'r': " + path);
    Vertex v{0, 0};
    std::stringstream ss(path.substr(1));
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (part.empty()) continue;
        int c = std::stoi(part);
        if (c < 0 || c >= lat.arity()) throw DomainError("InvalidVertex", "child index out of range in " + path);
        v = {v.a + 1, v.b * lat.arity() + c};
    }
    lat.check(v);
    return v;
}

inline json vertexJson(Vertex v) { return json::array({v.a, v.b}); }

inline json vertexJson(const Lattice& lat, Vertex v) {
    if (lat.kind() == Kind::DaryTree) return treePath(lat, v);
    return vertexJson(v);
}

inline Vertex vertexFrom(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw DomainError("InvalidVertex", "vertex must be [a, b], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

inline Vertex vertexFrom(const Lattice& lat, const json& j) {
    if (j.is_string()) {
        if (lat.kind() != Kind::DaryTree) throw DomainError("InvalidVertex", "path vertices only on trees");
        return treeVertex(lat, j.get<std::string>());
    }
    return vertexFrom(j);
}

inline json verticesJson(const Lattice& lat, const std::vector<Vertex>& vs) {
    json a = json::array();
    for (Vertex v : vs) a.push_back(vertexJson(lat, v));
    return a;
}

inline std::vector<Vertex> verticesFrom(const Lattice& lat, const json& j) {
    if (!j.is_array()) throw DomainError("InvalidVertex", "vertex list must be an array");
    std::vector<Vertex> out;
    for (const auto& e : j) out.push_back(vertexFrom(lat, e));
    return out;
}

inline json latticeJson(const Lattice& lat) {
    json j{{"kind", kindName(lat.kind())}};
    switch (lat.kind()) {
        case Kind::FiniteSquare:
        case Kind::Path:
        case Kind::Clique: j["n"] = lat.n(); break;
        case Kind::DaryTree:
            j["d"] = lat.arity();
            j["window"] = lat.window();
            break;
        default: j["window"] = lat.window();
    }
    return j;
}

// maxWindow bounds infinite windows (and tree depth); larger requests are
// WindowTooLarge.
inline Lattice latticeFrom(const json& j, int maxWindow = 20000) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DomainError("InvalidLattice", "lattice descriptor needs a string \"kind\"");
    std::string k = j["kind"];
    auto num = [&](const char* key, int def) -> long long {
        if (!j.contains(key)) {
            if (def < 0) throw DomainError("InvalidLattice", std::string("lattice descriptor needs \"") + key + "\"");
            return def;
        }
        if (!j[key].is_number_integer()) throw DomainError("InvalidLattice", std::string("\"") + key + "\" must be an integer");
        return j[key].get<long long>();
    };
    auto windowed = [&](int def) {
        long long w = num("window", def);
        if (w > maxWindow) throw DomainError("WindowTooLarge", "window " + std::to_string(w) + " above " + std::to_string(maxWindow));
        if (w < 0) throw DomainError("InvalidLattice", "window must be >= 0");
        return static_cast<int>(w);
    };
    auto sized = [&]() {
        long long n = num("n", -1);
        if (n > 4LL * maxWindow) throw DomainError("WindowTooLarge", "n " + std::to_string(n) + " too large");
        return static_cast<int>(n);
    };
    if (k == "square") return Lattice::finiteSquare(sized());
    if (k == "infinite_square") return Lattice::infiniteSquare(windowed(-1));
    if (k == "hex") return Lattice::hexagonal(windowed(-1));
    if (k == "tri") return Lattice::triangular(windowed(-1));
    if (k == "path") return Lattice::path(sized());
    if (k == "clique") return Lattice::clique(sized());
    if (k == "tree") return Lattice::daryTree(static_cast<int>(num("d", -1)), windowed(-1));
    throw DomainError("InvalidLattice", "unknown lattice kind '" + k + "'");
}

inline json scheduleJson(const BudgetSchedule& s) { return {{"base", s.base}, {"extras", s.extras}}; }

inline BudgetSchedule scheduleFrom(const json& j) {
    BudgetSchedule s;
    if (j.is_number_integer()) {
        s.base = j.get<int>();
    } else if (j.is_object()) {
        s.base = j.value("base", 1);
        if (j.contains("extras")) s.extras = j["extras"].get<std::vector<int>>();
    } else if (!j.is_null()) {
        throw DomainError("InvalidSchedule", "schedule must be an integer or {base, extras}");
    }
    if (s.base < 0) throw DomainError("InvalidSchedule", "base budget must be >= 0");
    for (int t : s.extras)
        if (t < 1) throw DomainError("InvalidSchedule", "extra firefighter turns start at 1");
    return s;
}

inline json traceJson(const Lattice& lat, const GameTrace& tr) {
    json rounds = json::array();
    for (const Round& r : tr.rounds)
        rounds.push_back({{"turn", r.turn},
                          {"protected", verticesJson(lat, r.protectedVertices)},
                          {"ignited", verticesJson(lat, r.ignited)}});
    json outcome{{"contained", tr.containedAtTurn.has_value()},
                 {"containedAtTurn", tr.containedAtTurn ? json(*tr.containedAtTurn) : json(nullptr)},
                 {"burnt", tr.burntCount},
                 {"saved", tr.savedCount ? json(*tr.savedCount) : json(nullptr)},
                 {"horizonExhausted", tr.horizonExhausted}};
    return {{"strategy", tr.strategy},
            {"lattice", latticeJson(lat)},
            {"initialFires", verticesJson(lat, tr.initialFires)},
            {"rounds", rounds},
            {"outcome", outcome}};
}

inline GameTrace traceFrom(const Lattice& lat, const json& j) {
    GameTrace tr;
    tr.strategy = j.value("strategy", "");
    tr.initialFires = verticesFrom(lat, j.at("initialFires"));
    for (const auto& r : j.at("rounds"))
        tr.rounds.push_back({r.at("turn").get<int>(), verticesFrom(lat, r.at("protected")), verticesFrom(lat, r.at("ignited"))});
    const auto& o = j.at("outcome");
    if (!o.at("containedAtTurn").is_null()) tr.containedAtTurn = o["containedAtTurn"].get<int>();
    tr.burntCount = o.at("burnt").get<long long>();
    if (!o.at("saved").is_null()) tr.savedCount = o["saved"].get<long long>();
    tr.horizonExhausted = o.at("horizonExhausted").get<bool>();
    return tr;
}

inline json solveResultJson(const Lattice& lat, const SolveResult& r) {
    json seq = json::array();
    for (const auto& mv : r.optimalSequence) seq.push_back(verticesJson(lat, mv));
    return {{"sn", r.sn}, {"sequence", seq}, {"nodes", r.nodesExpanded}, {"proved", r.proved}};
}

inline json stateView(const GameState& s) {
    const Lattice& lat = s.lattice();
    return {{"turn", s.turn()},
            {"budgetRemaining", s.budgetRemaining()},
            {"burning", verticesJson(lat, s.burning())},
            {"protected", verticesJson(lat, s.protectedVertices())},
            {"contained", s.isContained()}};
}

}  // namespace firegrid

#endif
