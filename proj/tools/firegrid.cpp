// firegrid: batch front end for simulations, solves, bounds, translations,
// the HTTP service and the acceptance checks.
//
// Exit codes: 0 ok, 1 domain error (or failed check), 2 usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "firegrid/acceptance.hpp"
#include "firegrid/analysis/bounds.hpp"
#include "firegrid/analysis/estimators.hpp"
#include "firegrid/io.hpp"
#include "firegrid/registry.hpp"
#include "firegrid/service.hpp"
#include "firegrid/solver.hpp"

using namespace firegrid;

namespace {

struct UsageError : std::runtime_error {
    UsageError(const std::string& flag, const std::string& msg) : std::runtime_error(flag + ": " + msg) {}
};

// JSON config files: a flat object whose keys are the long flag names of the
// subcommand. Arrays become repeated flags, nested [a,b] pairs "a,b", true
// booleans bare flags. Flags given on the command line win.
std::string configScalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ",") + configScalar(e);
        return s;
    }
    return v.dump();
}

std::vector<std::string> expandConfig(std::vector<std::string> args) {
    auto it = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("--config", 0) == 0; });
    if (it == args.end()) return args;
    std::string path;
    if (*it == "--config") {
        if (it + 1 == args.end()) throw UsageError("--config", "missing file name");
        path = *(it + 1);
        it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
        path = it->substr(9);
        it = args.erase(it);
    } else {
        return args;
    }
    std::ifstream in(path);
    if (!in) throw UsageError("--config", "cannot read " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw UsageError("--config", path + " is not a JSON object");
    auto given = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    std::vector<std::string> extra;
    for (auto& [key, val] : j.items()) {
        std::string flag = "--" + key;
        if (given(flag)) continue;
        if (val.is_boolean()) {
            if (val.get<bool>()) extra.push_back(flag);
            continue;
        }
        if (val.is_array() && !val.empty() && val.front().is_array())
            for (const auto& e : val) extra.push_back(flag + "=" + configScalar(e));
        else
            extra.push_back(flag + "=" + configScalar(val));
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

struct LatticeOpts {
    std::string kind;
    int n = -1;
    int window = -1;
    int d = 3;
};

struct GameOpts {
    std::vector<std::string> fires;
    int base = 1;
    std::vector<int> extras;
};

void addLattice(CLI::App* app, LatticeOpts& o) {
    app->add_option("--lattice", o.kind, "square | infinite_square | hex | tri | path | clique | tree")
        ->required()
        ->check(CLI::IsMember({"square", "infinite_square", "hex", "tri", "path", "clique", "tree"}));
    app->add_option("--n", o.n, "size of square, path and clique lattices")->check(CLI::PositiveNumber);
    app->add_option("--window", o.window, "window radius of infinite lattices, depth of trees")->check(CLI::NonNegativeNumber);
    app->add_option("--d", o.d, "tree arity")->check(CLI::PositiveNumber);
}

void addGame(CLI::App* app, GameOpts& o, const char* fireHelp = "initial fire a,b (repeatable; tree: r.i.j)") {
    app->add_option("--fire,--fires", o.fires, fireHelp)->allow_extra_args(false);
    app->add_option("--base", o.base, "firefighters per turn")->check(CLI::NonNegativeNumber);
    app->add_option("--extras", o.extras, "turns granting one extra firefighter")->delimiter(',');
}

bool isFiniteKind(const std::string& k) { return k == "square" || k == "path" || k == "clique"; }

Lattice buildLattice(const LatticeOpts& o, int defaultWindow) {
    json d{{"kind", o.kind}};
    if (isFiniteKind(o.kind)) {
        if (o.n < 0) throw UsageError("--n", "required for --lattice " + o.kind);
        d["n"] = o.n;
    } else {
        int w = o.window >= 0 ? o.window : defaultWindow;
        if (w < 0) throw UsageError("--window", "required for --lattice " + o.kind);
        d["window"] = w;
        if (o.kind == "tree") d["d"] = o.d;
    }
    return latticeFrom(d, 1 << 20);
}

Vertex parseVertex(const Lattice& lat, const std::string& s, const std::string& flag) {
    if (lat.kind() == Kind::DaryTree && !s.empty() && s[0] == 'r') return treeVertex(lat, s);
    int a = 0, b = 0;
    char comma = 0, extra = 0;
    std::istringstream is(s);
    if (!(is >> a >> comma >> b) || comma != ',' || (is >> extra)) {
        if (lat.kind() == Kind::Path || lat.kind() == Kind::Clique) {
            std::istringstream one(s);
            if (one >> a && !(one >> extra)) return lat.check({a, 0}), Vertex{a, 0};
        }
        throw UsageError(flag, "expected a,b but got '" + s + "'");
    }
    lat.check({a, b});
    return {a, b};
}

std::vector<Vertex> parseFires(const Lattice& lat, const GameOpts& g) {
    std::vector<Vertex> out;
    for (const auto& f : g.fires) out.push_back(parseVertex(lat, f, "--fire"));
    if (out.empty()) out.push_back(Vertex{0, 0});
    return out;
}

int fireReach(const std::vector<std::string>& fires) {
    int m = 0;
    for (const auto& f : fires) {
        int a = 0, b = 0;
        char c = 0;
        std::istringstream is(f);
        if (is >> a >> c >> b) m = std::max(m, std::abs(a) + std::abs(b));
    }
    return m;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DomainError("OutputError", "cannot write " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// ---- simulate -----------------------------------------------------------

struct SimulateOpts {
    LatticeOpts lat;
    GameOpts game;
    std::string strategy = "idle";
    std::string params = "{}";
    int horizon = -1;
    std::vector<int> radii;
    std::string center;
    std::string format = "json";
    std::string out;
    bool trace = false;
};

json strategyParams(const std::string& text, std::uint64_t seed, const std::string& name) {
    json p = json::parse(text, nullptr, false);
    if (p.is_discarded() || !p.is_object()) throw UsageError("--params", "expected a JSON object");
    if (name == "random" && !p.contains("seed")) p["seed"] = seed;
    return p;
}

int runSimulate(const SimulateOpts& o, std::uint64_t seed) {
    int rmax = o.radii.empty() ? 0 : *std::max_element(o.radii.begin(), o.radii.end());
    bool finite = isFiniteKind(o.lat.kind);
    int horizon = o.horizon > 0 ? o.horizon : (rmax > 0 ? 2 * rmax : 100);
    Lattice lat = buildLattice(o.lat, o.lat.kind == "tree" ? 10 : horizon + 2 + fireReach(o.game.fires));
    if (finite && o.horizon <= 0) horizon = static_cast<int>(lat.indexCount()) + 1;
    auto fires = parseFires(lat, o.game);
    StrategyRef ref{o.strategy, strategyParams(o.params, seed, o.strategy)};
    BudgetSchedule sched{o.game.base, o.game.extras};
    for (int t : strategyExtras(ref)) sched.extras.push_back(t);
    auto strat = makeStrategy(ref, lat, fires);
    GameState s(lat, fires, sched);
    auto tr = run(s, *strat, horizon);
    Vertex c = o.center.empty() ? fires.front() : parseVertex(lat, o.center, "--center");
    auto ratios = savedRatios(s, c, o.radii);

    Output out(o.out);
    if (o.format == "csv") {
        if (!o.radii.empty()) {
            out.os() << "radius,saved_ratio\n";
            for (std::size_t i = 0; i < o.radii.size(); ++i) out.os() << o.radii[i] << "," << fixed(ratios[i]) << "\n";
        } else {
            out.os() << "turn,protected,ignited,burnt_total\n";
            long long burnt = static_cast<long long>(fires.size());
            for (const Round& r : tr.rounds) {
                burnt += static_cast<long long>(r.ignited.size());
                out.os() << r.turn << "," << r.protectedVertices.size() << "," << r.ignited.size() << "," << burnt << "\n";
            }
        }
        return 0;
    }
    json cfg{{"lattice", o.lat.kind}, {"strategy", o.strategy}, {"params", ref.params.dump()}, {"horizon", horizon},
             {"base", o.game.base}, {"extras", o.game.extras}, {"fire", json::array()}, {"seed", seed}};
    for (Vertex f : fires) cfg["fire"].push_back(std::to_string(f.a) + "," + std::to_string(f.b));
    if (finite) cfg["n"] = lat.n();
    else cfg["window"] = lat.window();
    if (o.lat.kind == "tree") cfg["d"] = lat.arity();
    if (!o.radii.empty()) cfg["radii"] = o.radii;
    json j{{"config", cfg}, {"outcome", traceJson(lat, tr)["outcome"]}, {"turns", s.turn()}};
    json rs = json::array();
    for (std::size_t i = 0; i < o.radii.size(); ++i) rs.push_back({{"radius", o.radii[i]}, {"saved_ratio", ratios[i]}});
    j["ratios"] = rs;
    if (o.trace) j["trace"] = traceJson(lat, tr);
    out.os() << j.dump(2) << "\n";
    return 0;
}

// ---- solve ----------------------------------------------------------------

struct SolveCli {
    LatticeOpts lat;
    GameOpts game;
    int cap = 64;
    bool noSymmetry = false;
    int maxDepth = 1 << 20;
    std::string out;
};

std::string cacheKey(const json& req) {
    return std::to_string(std::hash<std::string>{}(req.dump()));
}

int runSolve(const SolveCli& o) {
    Lattice lat = buildLattice(o.lat, -1);
    auto fires = parseFires(lat, o.game);
    SolveOptions opt;
    opt.cap = o.cap;
    opt.symmetry = !o.noSymmetry;
    opt.maxDepth = o.maxDepth;
    BudgetSchedule sched{o.game.base, o.game.extras};
    json req{{"lattice", latticeJson(lat)}, {"fires", verticesJson(lat, fires)}, {"schedule", scheduleJson(sched)},
             {"cap", o.cap}, {"maxDepth", o.maxDepth}};
    json result;
    std::filesystem::path cached;
    if (const char* dir = std::getenv("FIREGRID_CACHE"); dir && *dir) {
        cached = std::filesystem::path(dir) / ("solve-" + cacheKey(req) + ".json");
        std::ifstream in(cached);
        if (in) {
            json c = json::parse(in, nullptr, false);
            if (!c.is_discarded() && c.value("request", json()) == req) result = c["result"];
        }
    }
    if (result.is_null()) {
        result = solveResultJson(lat, solveOptimal(lat, fires, sched, opt));
        if (!cached.empty()) {
            std::filesystem::create_directories(cached.parent_path());
            std::ofstream(cached) << json{{"request", req}, {"result", result}}.dump();
        }
    }
    Output out(o.out);
    out.os() << result.dump() << "\n";
    return 0;
}

// ---- rate -------------------------------------------------------------------

struct RateOpts {
    LatticeOpts lat;
    GameOpts game;
    std::string strategy;
    std::string params = "{}";
    int samples = 0;
    int horizon = -1;
    std::vector<int> radii;
    int cap = 64;
    std::string format = "json";
    std::string out;
};

template <class F>
void parallelFor(int count, int jobs, F&& f) {
    jobs = std::max(1, std::min(jobs, count));
    std::vector<std::thread> ts;
    for (int w = 0; w < jobs; ++w)
        ts.emplace_back([&, w] {
            for (int i = w; i < count; i += jobs) f(i);
        });
    for (auto& t : ts) t.join();
}

int runRate(const RateOpts& o, std::uint64_t seed, int jobs) {
    bool finite = isFiniteKind(o.lat.kind);
    Output out(o.out);
    if (!finite) {
        if (o.strategy.empty()) throw UsageError("--strategy", "infinite lattices need a strategy to estimate a rate");
        if (o.radii.empty()) throw UsageError("--radii", "required for infinite lattices");
        int rmax = *std::max_element(o.radii.begin(), o.radii.end());
        int horizon = o.horizon > 0 ? o.horizon : 2 * rmax;
        Lattice lat = buildLattice(o.lat, o.lat.kind == "tree" ? rmax : horizon + 2 + fireReach(o.game.fires));
        auto fires = parseFires(lat, o.game);
        StrategyRef ref{o.strategy, strategyParams(o.params, seed, o.strategy)};
        BudgetSchedule sched{o.game.base, o.game.extras};
        for (int t : strategyExtras(ref)) sched.extras.push_back(t);
        auto strat = makeStrategy(ref, lat, fires);
        auto est = survivingRateEstimate(GameState(lat, fires, sched), *strat, fires.front(), o.radii, horizon);
        if (o.format == "csv") {
            out.os() << "radius,saved_ratio\n";
            for (std::size_t i = 0; i < est.radii.size(); ++i) out.os() << est.radii[i] << "," << fixed(est.ratios[i]) << "\n";
            return 0;
        }
        json rs = json::array();
        for (std::size_t i = 0; i < est.radii.size(); ++i) rs.push_back({{"radius", est.radii[i]}, {"saved_ratio", est.ratios[i]}});
        out.os() << json{{"strategy", o.strategy}, {"horizon", horizon}, {"contained", est.contained}, {"ratios", rs}}.dump(2)
                 << "\n";
        return 0;
    }

    Lattice lat = buildLattice(o.lat, -1);
    std::vector<Vertex> starts = lat.vertices();
    if (o.samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
        std::vector<Vertex> s;
        for (int i = 0; i < o.samples; ++i) s.push_back(starts[pick(rng)]);
        starts = s;
    }
    int count = static_cast<int>(starts.size());
    std::vector<long long> saved(count);
    BudgetSchedule sched{o.game.base, o.game.extras};
    if (o.strategy.empty()) {
        SolveOptions opt;
        opt.cap = o.cap;
        parallelFor(count, jobs, [&](int i) { saved[i] = solveOptimal(lat, {starts[i]}, sched, opt).sn; });
    } else {
        StrategyRef ref{o.strategy, strategyParams(o.params, seed, o.strategy)};
        makeStrategy(ref, lat, {starts.front()});  // fail early on unsupported lattices
        parallelFor(count, jobs, [&](int i) {
            auto strat = makeStrategy(ref, lat, {starts[i]});
            GameState s(lat, {starts[i]}, sched);
            saved[i] = *run(s, *strat, static_cast<int>(lat.indexCount()) + 1).savedCount;
        });
    }
    long long n = static_cast<long long>(lat.indexCount());
    long long total = 0;
    for (long long v : saved) total += v;
    if (o.format == "csv") {
        out.os() << "a,b,saved,saved_fraction\n";
        for (int i = 0; i < count; ++i)
            out.os() << starts[i].a << "," << starts[i].b << "," << saved[i] << ","
                     << fixed(static_cast<double>(saved[i]) / static_cast<double>(n)) << "\n";
        return 0;
    }
    json j{{"lattice", latticeJson(lat)}, {"starts", count}, {"method", o.strategy.empty() ? "solver" : o.strategy}};
    if (o.strategy.empty() && o.samples == 0) {
        Rational rho(total, n * n);
        j["rho"] = std::to_string(rho.numerator()) + "/" + std::to_string(rho.denominator());
        j["value"] = boost::rational_cast<double>(rho);
    } else {
        j["mean_saved_fraction"] = static_cast<double>(total) / static_cast<double>(n * count);
    }
    out.os() << j.dump(2) << "\n";
    return 0;
}

// ---- bounds -----------------------------------------------------------------

struct BoundsOpts {
    std::string which = "theorem1";
    double tol = 1e-10;
    bool mapleCheck = false;
    int n = 101;
    std::string start = "0,0";
    double x = 0, y = 0;
    std::string format = "json";
    std::string out;
};

int runBounds(const BoundsOpts& o) {
    Output out(o.out);
    auto fraction = [](const ExactConstant& c) { return std::to_string(c.num) + "/" + std::to_string(c.den); };
    if (o.which == "theorem1") {
        auto r = upperBoundTheorem1(o.tol);
        const auto& up = constant("upper");
        if (o.format == "csv") {
            out.os() << "label,computed,exact,abs_diff\n";
            for (auto& [label, v] : r.cValues)
                out.os() << label << "," << fixed(v, 12) << "," << fixed(constant(label).value(), 12) << ","
                         << fixed(std::abs(v - constant(label).value()), 12) << "\n";
            out.os() << "total," << fixed(r.total, 12) << "," << fixed(up.value(), 12) << ","
                     << fixed(std::abs(r.total - up.value()), 12) << "\n";
            auto pr = upperBoundFromProfile(o.tol);
            const auto& c5p = constant("C5_profile");
            const auto& upp = constant("upper_profile");
            out.os() << "C5_profile," << fixed(pr.cValues["C5"], 12) << "," << fixed(c5p.value(), 12) << ","
                     << fixed(std::abs(pr.cValues["C5"] - c5p.value()), 12) << "\n";
            out.os() << "total_profile," << fixed(pr.total, 12) << "," << fixed(upp.value(), 12) << ","
                     << fixed(std::abs(pr.total - upp.value()), 12) << "\n";
            return 0;
        }
        json j{{"C", r.cValues}, {"total", r.total}, {"exact_total", fraction(up)}, {"tol", o.tol}};
        // region 5 integrated from the exact sphere profile instead of the tabulated formula
        auto pr = upperBoundFromProfile(o.tol);
        j["profile_C5"] = pr.cValues["C5"];
        j["profile_total"] = pr.total;
        j["profile_exact_total"] = fraction(constant("upper_profile"));
        if (o.mapleCheck) {
            json rows = json::array();
            for (auto& [label, v] : r.cValues) {
                const auto& c = constant(label);
                rows.push_back({{"label", label}, {"computed", v}, {"exact", fraction(c)}, {"exact_value", c.value()},
                                {"abs_diff", std::abs(v - c.value())}, {"ok", std::abs(v - c.value()) <= 1e-6}});
            }
            j["maple_check"] = rows;
        }
        out.os() << j.dump(2) << "\n";
        return 0;
    }
    if (o.which == "lower") {
        out.os() << json{{"value", lowerBoundIntegral(std::min(o.tol, 1e-9))}, {"exact", "5/8"}}.dump(2) << "\n";
        return 0;
    }
    if (o.which == "constants") {
        if (o.format == "csv") {
            out.os() << "label,num,den,value\n";
            for (const auto& c : constantsTable())
                out.os() << c.label << "," << c.num << "," << c.den << "," << fixed(c.value(), 12) << "\n";
            return 0;
        }
        json a = json::array();
        for (const auto& c : constantsTable())
            a.push_back({{"label", c.label}, {"num", c.num}, {"den", c.den}, {"value", c.value()}, {"note", c.note}});
        out.os() << a.dump(2) << "\n";
        return 0;
    }
    if (o.which == "lemma1") {
        Lattice lat = Lattice::finiteSquare(o.n);
        Vertex v = parseVertex(lat, o.start, "--start");
        long long b = lemma1BurnLowerBound(o.n, v.a, v.b);
        out.os() << json{{"n", o.n}, {"start", vertexJson(v)}, {"burnt_lower_bound", b},
                         {"fraction", static_cast<double>(b) / (static_cast<double>(o.n) * o.n)}}
                        .dump(2)
                 << "\n";
        return 0;
    }
    // profile
    BoundProfile p = sphereSizeProfile(o.x, o.y);
    double rEnd = p.pieces.back().hi;
    if (o.format == "csv") {
        out.os() << "r,profile,burn_integrand\n";
        for (int i = 0; i <= 200; ++i) {
            double r = rEnd * i / 200;
            out.os() << fixed(r) << "," << fixed(p(r)) << "," << fixed(std::max(p(r) - r, 0.0)) << "\n";
        }
        return 0;
    }
    const auto& th = p.th;
    json pieces = json::array();
    for (const auto& q : p.pieces) pieces.push_back({{"lo", q.lo}, {"hi", q.hi}, {"c0", q.c0}, {"c1", q.c1}});
    out.os() << json{{"region", regionName(th.region)}, {"t", th.t},
                     {"thresholds",
                      {{"tE", th.tE}, {"tN", th.tN}, {"tS", th.tS}, {"tW", th.tW}, {"tNE", th.tNE}, {"tSE", th.tSE},
                       {"tNW", th.tNW}, {"tSW", th.tSW}}},
                     {"pieces", pieces},
                     {"burn_fraction", regionBurnFraction(o.x, o.y)}}
                    .dump(2)
             << "\n";
    return 0;
}

// ---- translate --------------------------------------------------------------

struct TranslateOpts {
    GameOpts game;
    int maxTurns = 4;
    int window = 7;
    int hexWindow = 64;
    std::string out;
};

int runTranslate(const TranslateOpts& o) {
    Lattice tri = Lattice::triangular(o.window);
    auto fires = parseFires(tri, o.game);
    BudgetSchedule sched{o.game.base, o.game.extras};
    auto found = verifyContainmentSearch(tri, fires, sched, o.maxTurns);
    Output out(o.out);
    if (!found.containable) {
        out.os() << json{{"containable", false}, {"nodes", found.nodesExpanded}}.dump(2) << "\n";
        return 1;
    }
    auto tr = translateTriToHex(found.witness, sched, fires, o.window + 2 * o.maxTurns);
    auto rep = translationAudit(tr, o.hexWindow);
    json moves = json::array();
    for (const auto& m : found.witness) moves.push_back(verticesJson(tri, m));
    json hexMoves = json::array();
    for (const auto& m : tr.hexMoves) hexMoves.push_back(verticesJson(Lattice::hexagonal(o.hexWindow), m));
    json j{{"tri", {{"moves", moves}, {"turns", rep.triTurns}, {"burnt", rep.triBurnt}, {"firefighters", rep.firefighters}}},
           {"hex", {{"moves", hexMoves}, {"turns", rep.hexTurns}, {"burnt", rep.hexBurnt}, {"burnt_outside_A", rep.hexBurntOdd}}},
           {"checks",
            {{"parity", rep.parityOk},
             {"turns_within_2t_plus_1", rep.turnsOk},
             {"burnt_within_2b_plus_f", rep.burntOk},
             {"outside_A_within_b_plus_f", rep.oddBurntOk},
             {"outside_A_within_b", rep.oddWithinB}}},
           {"ok", rep.ok()}};
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    out.os() << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"firegrid: firefighter games on grids and lattices"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "seed for random strategies and start sampling");
    app.add_option("--jobs", jobs, "worker threads for independent runs")->check(CLI::PositiveNumber);
    std::string configPath;
    auto withConfig = [&](CLI::App* sub) {
        sub->add_option("--config", configPath, "JSON file with the same keys as the flags");
        sub->add_option("--seed", seed, "seed for random strategies and start sampling");
        sub->add_option("--jobs", jobs, "worker threads for independent runs")->check(CLI::PositiveNumber);
    };

    SimulateOpts sim;
    auto* simulate = app.add_subcommand("simulate", "play a strategy and report outcome and saved ratios");
    withConfig(simulate);
    addLattice(simulate, sim.lat);
    addGame(simulate, sim.game);
    simulate->add_option("--strategy", sim.strategy, "strategy name (see serve /strategies)");
    simulate->add_option("--params", sim.params, "strategy parameters as a JSON object");
    simulate->add_option("--horizon", sim.horizon, "maximum number of turns")->check(CLI::PositiveNumber);
    simulate->add_option("--radii", sim.radii, "ball radii for saved ratios")->delimiter(',');
    simulate->add_option("--center", sim.center, "ball center a,b (default: first fire)");
    simulate->add_option("--format", sim.format)->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--out", sim.out, "output file (default stdout)");
    simulate->add_flag("--trace", sim.trace, "include the full trace in JSON output");

    SolveCli sol;
    auto* solve = app.add_subcommand("solve", "optimal number of saved vertices on a small finite lattice");
    withConfig(solve);
    addLattice(solve, sol.lat);
    addGame(solve, sol.game);
    solve->add_option("--cap", sol.cap, "largest vertex count the solver accepts")->check(CLI::PositiveNumber);
    solve->add_flag("--no-symmetry", sol.noSymmetry, "disable symmetry reduction");
    solve->add_option("--max-depth", sol.maxDepth, "turn cutoff (result is a lower bound when hit)");
    solve->add_option("--out", sol.out);

    RateOpts rate;
    auto* rateCmd = app.add_subcommand("rate", "surviving rate: exact on finite lattices, estimated on infinite ones");
    withConfig(rateCmd);
    addLattice(rateCmd, rate.lat);
    addGame(rateCmd, rate.game, "fire for infinite-lattice estimates");
    rateCmd->add_option("--strategy", rate.strategy, "play this strategy instead of optimal play");
    rateCmd->add_option("--params", rate.params);
    rateCmd->add_option("--samples", rate.samples, "sample this many random starts instead of all")
        ->check(CLI::PositiveNumber);
    rateCmd->add_option("--horizon", rate.horizon)->check(CLI::PositiveNumber);
    rateCmd->add_option("--radii", rate.radii)->delimiter(',');
    rateCmd->add_option("--cap", rate.cap)->check(CLI::PositiveNumber);
    rateCmd->add_option("--format", rate.format)->check(CLI::IsMember({"json", "csv"}));
    rateCmd->add_option("--out", rate.out);

    BoundsOpts bo;
    auto* bounds = app.add_subcommand("bounds", "upper and lower bound integrals, constants, profiles");
    withConfig(bounds);
    bounds->add_option("--which", bo.which)->check(CLI::IsMember({"theorem1", "lower", "constants", "lemma1", "profile"}));
    bounds->add_option("--tol", bo.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    bounds->add_flag("--maple-check", bo.mapleCheck, "compare every region constant with its exact value");
    bounds->add_option("--n", bo.n, "grid size for lemma1")->check(CLI::PositiveNumber);
    bounds->add_option("--start", bo.start, "start a,b for lemma1");
    bounds->add_option("--x", bo.x, "normalized start x for profile")->check(CLI::Range(0.0, 0.5));
    bounds->add_option("--y", bo.y, "normalized start y for profile")->check(CLI::Range(0.0, 0.5));
    bounds->add_option("--format", bo.format)->check(CLI::IsMember({"json", "csv"}));
    bounds->add_option("--out", bo.out);

    TranslateOpts to;
    to.game.base = 4;
    auto* translate = app.add_subcommand("translate", "solve a triangular containment and replay it on the hexagonal lattice");
    withConfig(translate);
    addGame(translate, to.game, "triangular fire a,b (repeatable)");
    translate->add_option("--max-turns", to.maxTurns)->check(CLI::PositiveNumber);
    translate->add_option("--window", to.window, "triangular search window")->check(CLI::PositiveNumber);
    translate->add_option("--hex-window", to.hexWindow)->check(CLI::PositiveNumber);
    translate->add_option("--out", to.out);

    int port = 8080;
    std::string host = "127.0.0.1";
    ServiceConfig scfg;
    int ttl = 1800;
    auto* serve = app.add_subcommand("serve", "run the HTTP session service");
    withConfig(serve);
    serve->add_option("--port", port)->check(CLI::Range(0, 65535));
    serve->add_option("--host", host);
    serve->add_option("--max-window", scfg.maxWindow)->check(CLI::PositiveNumber);
    serve->add_option("--solver-cap", scfg.solverCap)->check(CLI::PositiveNumber);
    serve->add_option("--ttl", ttl, "idle session lifetime in seconds")->check(CLI::PositiveNumber);

    std::vector<std::string> ids;
    auto* check = app.add_subcommand("check", "run acceptance criteria (all when none given)");
    check->add_option("criteria", ids, "criterion ids such as A1 A7");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expandConfig(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*simulate) return runSimulate(sim, seed);
        if (*solve) return runSolve(sol);
        if (*rateCmd) return runRate(rate, seed, jobs);
        if (*bounds) return runBounds(bo);
        if (*translate) return runTranslate(to);
        if (*check) return acceptance::runCriteria({ids.begin(), ids.end()}, stdout) == 0 ? 0 : 1;
        if (*serve) {
            scfg.ttl = std::chrono::seconds(ttl);
            scfg.seed = static_cast<unsigned>(seed);
            Service svc(scfg);
            httplib::Server srv;
            svc.mount(srv);
            std::cerr << "listening on " << host << ":" << port << "\n";
            return srv.listen(host, port) ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
