#ifndef FIREGRID_ANALYSIS_ESTIMATORS_HPP
#define FIREGRID_ANALYSIS_ESTIMATORS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "firegrid/engine.hpp"
#include "firegrid/strategies/tri.hpp"

namespace firegrid {

// |ball(c,i) \ burning| / |ball(c,i)| for each radius, from a finished state.
inline std::vector<double> savedRatios(const GameState& s, Vertex c, const std::vector<int>& radii) {
    const Lattice& lat = s.lattice();
    std::vector<double> out;
    if (radii.empty()) return out;
    int rmax = *std::max_element(radii.begin(), radii.end());
    std::vector<long long> total(rmax + 1, 0), burnt(rmax + 1, 0);
    if (lat.kind() == Kind::DaryTree) {
        for (Vertex v : lat.ball(c, rmax)) {
            int d = lat.distance(c, v);
            ++total[d];
            if (s.isBurning(v)) ++burnt[d];
        }
    } else {
        for (int a = c.a - rmax; a <= c.a + rmax; ++a)
            for (int b = c.b - rmax; b <= c.b + rmax; ++b) {
                Vertex v{a, b};
                if (lat.isFinite() && !lat.contains(v)) continue;
                int d = lat.distance(c, v);
                if (d > rmax) continue;
                if (!lat.isFinite() && !lat.contains(v))
                    throw DomainError("HorizonTooSmall", "radius " + std::to_string(rmax) + " leaves the window");
                ++total[d];
                if (s.isBurning(v)) ++burnt[d];
            }
    }
    for (int r = 1; r <= rmax; ++r) total[r] += total[r - 1], burnt[r] += burnt[r - 1];
    for (int i : radii) out.push_back(1.0 - static_cast<double>(burnt[i]) / static_cast<double>(total[i]));
    return out;
}

struct RateEstimate {
    std::vector<int> radii;
    std::vector<double> ratios;
    int horizon = 0;
    bool contained = false;
};

// Runs the strategy for `horizon` rounds (or to containment) and measures
// the saved share of balls around c. Radii up to half the horizon are free of
// edge effects; larger ones up to the horizon are allowed.
inline RateEstimate survivingRateEstimate(GameState s, Strategy& strat, Vertex c, const std::vector<int>& radii,
                                          int horizon) {
    int rmax = radii.empty() ? 0 : *std::max_element(radii.begin(), radii.end());
    if (!s.lattice().isFinite() && s.lattice().kind() != Kind::DaryTree && rmax > horizon)
        throw DomainError("HorizonTooSmall", "horizon " + std::to_string(horizon) + " below radius " +
                                                 std::to_string(rmax));
    auto tr = run(s, strat, horizon);
    RateEstimate out{radii, savedRatios(s, c, radii), horizon, tr.containedAtTurn.has_value()};
    return out;
}

struct CenterGap {
    std::vector<int> radii;
    std::vector<double> gaps;
    double tailMax = 0;
};

// Ratio gap between two measuring centers on one finished game.
inline CenterGap centerInvarianceCheck(const GameState& finished, Vertex c1, Vertex c2, const std::vector<int>& radii) {
    const Lattice& lat = finished.lattice();
    int rmax = *std::max_element(radii.begin(), radii.end());
    if (lat.kind() != Kind::DaryTree) {
        double sphere = 0, ball = 0;
        Vertex o{0, 0};
        for (int r = 0; r <= rmax; ++r) {
            double sz = r == 0 ? 1.0
                        : lat.kind() == Kind::Hexagonal  ? 3.0 * r
                        : lat.kind() == Kind::Triangular ? 6.0 * r
                                                         : 4.0 * r;
            ball += sz;
            sphere = sz;
        }
        (void)o;
        if (sphere / ball > 0.2) throw DomainError("GrowthHypothesis", "sphere/ball ratio above 0.2 at max radius");
    } else {
        throw DomainError("GrowthHypothesis", "trees grow too fast for center invariance");
    }
    auto r1 = savedRatios(finished, c1, radii);
    auto r2 = savedRatios(finished, c2, radii);
    CenterGap g{radii, {}, 0};
    for (std::size_t i = 0; i < radii.size(); ++i) g.gaps.push_back(std::abs(r1[i] - r2[i]));
    for (std::size_t i = radii.size() / 2; i < radii.size(); ++i) g.tailMax = std::max(g.tailMax, g.gaps[i]);
    return g;
}

inline double containmentRadiusRatio(const GameState& s, Vertex v0, int T) {
    if (T <= 0) throw DomainError("TraceTooShort", "T must be positive");
    int m = 0;
    for (Vertex v : s.burning()) m = std::max(m, s.lattice().distance(v0, v));
    return static_cast<double>(m) / T;
}

struct TranslationReport {
    int triTurns = 0;
    long long triBurnt = 0;
    long long firefighters = 0;
    int hexTurns = 0;
    long long hexBurnt = 0;
    long long hexBurntOdd = 0;  // burnt vertices outside A
    bool parityOk = true;
    bool turnsOk = false;
    bool burntOk = false;
    bool oddBurntOk = false;    // burnt outside A <= b + f
    bool oddWithinB = false;    // the sharper count b, which fails when partners are protected
    std::string failure;
    bool ok() const { return parityOk && turnsOk && burntOk && oddBurntOk; }
};

// Plays the translated strategy on the hexagonal lattice and checks the
// turn, burnt-count and ignition-parity claims. A burnt vertex outside A
// has a unique partner in A that is burnt or protected, so at most b + f
// of them burn.
inline TranslationReport translationAudit(const Translation& tr, int hexWindow = 64) {
    TranslationReport rep;
    rep.triTurns = tr.triTurns;
    rep.triBurnt = tr.triBurnt;
    rep.firefighters = tr.firefighters;
    GameState h(Lattice::hexagonal(hexWindow), tr.hexFires, tr.hexSchedule);
    ScriptStrategy script(tr.hexMoves, "translated");
    auto trace = run(h, script, 2 * tr.triTurns + 1, [&](const GameState&, const Round& r) {
        for (Vertex v : r.ignited) {
            bool inA = LatticeEmbedding::inA(v);
            if ((r.turn % 2 == 1) == inA) {
                rep.parityOk = false;
                rep.failure += "turn " + std::to_string(r.turn) + " ignites " + toString(v) + "; ";
            }
        }
    });
    rep.hexTurns = trace.containedAtTurn.value_or(-1);
    rep.hexBurnt = trace.burntCount;
    for (Vertex v : h.burning())
        if (!LatticeEmbedding::inA(v)) ++rep.hexBurntOdd;
    rep.turnsOk = trace.containedAtTurn && *trace.containedAtTurn <= 2 * tr.triTurns + 1;
    rep.burntOk = rep.hexBurnt <= 2 * tr.triBurnt + tr.firefighters;
    rep.oddBurntOk = rep.hexBurntOdd <= tr.triBurnt + tr.firefighters;
    rep.oddWithinB = rep.hexBurntOdd <= tr.triBurnt;
    if (!rep.turnsOk) rep.failure += "not contained by turn " + std::to_string(2 * tr.triTurns + 1) + "; ";
    if (!rep.burntOk) rep.failure += "burnt " + std::to_string(rep.hexBurnt) + " > 2b+f; ";
    if (!rep.oddBurntOk) rep.failure += "burnt outside A above b+f; ";
    return rep;
}

}  // namespace firegrid

#endif
