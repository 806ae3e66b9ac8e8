#include <gtest/gtest.h>

#include <random>

#include "firegrid/analysis/bounds.hpp"
#include "firegrid/analysis/estimators.hpp"
#include "firegrid/solver.hpp"
#include "firegrid/strategies/hex.hpp"
#include "firegrid/strategies/random.hpp"
#include "firegrid/strategies/tri.hpp"
#include "firegrid/strategies/wedge.hpp"

using namespace firegrid;

namespace {

std::pair<double, double> randomStart(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0, 0.5);
    double x = u(rng), y = u(rng);
    if (y > x) std::swap(x, y);
    return {x, y};
}

std::string codeOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

long long wedgeBurnt(int n, Vertex start) {
    GameState s(Lattice::finiteSquare(n), {start}, BudgetSchedule{});
    SquareWedge w(start, n);
    run(s, w, 4 * n);
    return static_cast<long long>(s.burning().size());
}

}  // namespace

TEST(Thresholds, Examples) {
    auto a = thresholds(0, 0);
    EXPECT_DOUBLE_EQ(a.tE, 0.5);
    EXPECT_DOUBLE_EQ(a.tN, 0.5);
    EXPECT_DOUBLE_EQ(a.tS, 0.5);
    EXPECT_DOUBLE_EQ(a.tW, 0.5);
    EXPECT_DOUBLE_EQ(a.tNE, 1.0);
    EXPECT_EQ(a.region, Region::R1a);
    EXPECT_DOUBLE_EQ(a.t, 0.8);

    auto b = thresholds(0.25, 0.10);
    EXPECT_EQ(b.region, Region::R2a);
    EXPECT_NEAR(b.t, 0.8375, 1e-12);

    auto c = thresholds(0.4, 0.3);
    EXPECT_EQ(c.region, Region::R4);
    EXPECT_NEAR(c.t, 2.0 / 3 + 0.8 / 3, 1e-12);

    EXPECT_EQ(codeOf([] { thresholds(0.1, 0.2); }), "OutOfTriangle");
    EXPECT_EQ(codeOf([] { thresholds(0.6, 0.1); }), "OutOfTriangle");
}

TEST(Thresholds, Orderings) {
    std::mt19937 rng(5);
    for (int i = 0; i < 500; ++i) {
        auto [x, y] = randomStart(rng);
        auto th = thresholds(x, y);
        EXPECT_LE(th.tE, th.tN);
        EXPECT_LE(th.tN, th.tS);
        EXPECT_LE(th.tS, th.tW);
        EXPECT_LE(th.tNE, th.tSE);
        EXPECT_LE(th.tSE, th.tNW);
        EXPECT_LE(th.tNW, th.tSW);
        EXPECT_GE(th.tNE, th.tN);
        EXPECT_GE(th.tSE, th.tS);
        EXPECT_GE(th.tNW, th.tW);
        EXPECT_EQ(regionCase(th.region) == 1, y <= 0.5 - 2 * x);
        // the stopping time is where the profile falls below r
        BoundProfile p = sphereSizeProfile(x, y);
        EXPECT_NEAR(p(th.t), th.t, 1e-12) << x << "," << y;
        EXPECT_GT(p(th.t - 1e-6), th.t - 1e-6);
    }
}

TEST(Profile, PiecesAreContinuousAndNonnegative) {
    std::mt19937 rng(6);
    for (int i = 0; i < 100; ++i) {
        auto [x, y] = randomStart(rng);
        BoundProfile p = sphereSizeProfile(x, y);
        for (std::size_t k = 0; k + 1 < p.pieces.size(); ++k) {
            const auto& a = p.pieces[k];
            const auto& b = p.pieces[k + 1];
            EXPECT_NEAR(a.hi, b.lo, 1e-15);
            EXPECT_NEAR(a.c0 + a.c1 * a.hi, b.c0 + b.c1 * b.lo, 1e-12) << x << "," << y << " piece " << k;
            EXPECT_GE(a.c0 + a.c1 * a.hi, -1e-12);
        }
        EXPECT_NEAR(p(p.pieces.back().hi), 0.0, 1e-12);
        if (regionCase(p.th.region) == 1) {
            double r = p.th.tE + 1e-3;
            EXPECT_NEAR(p(r), 1 - 2 * x + 2 * r, 1e-12);
        }
    }
}

TEST(Profile, MatchesExactSphereCounts) {
    const int n = 300;
    Lattice g = Lattice::finiteSquare(n);
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        auto [x, y] = randomStart(rng);
        int a = std::min(static_cast<int>(std::lround(x * n)), g.hi());
        int b = std::min(static_cast<int>(std::lround(y * n)), a);
        BoundProfile p = sphereSizeProfile(static_cast<double>(a) / n, static_cast<double>(b) / n);
        for (int r = 1; r <= 2 * n; ++r) {
            double exact = static_cast<double>(g.sphereSize({a, b}, r)) / n;
            ASSERT_LE(std::abs(p(static_cast<double>(r) / n) - exact), 4.0 / n) << a << "," << b << " r=" << r;
        }
    }
}

TEST(BurnFraction, ClosedFormMatchesQuadrature) {
    EXPECT_DOUBLE_EQ(regionBurnFraction(0, 0), 0.6);
    std::mt19937 rng(9);
    int inFive = 0;
    for (int i = 0; i < 200; ++i) {
        auto [x, y] = randomStart(rng);
        double numeric = burnFractionNumeric(x, y);
        EXPECT_NEAR(profileBurnFraction(x, y), numeric, 1e-9) << x << "," << y;
        // the tabulated region 5 formula sits above the profile integral
        double gap = 0;
        if (thresholds(x, y).region == Region::R5) {
            ++inFive;
            gap = y >= -1.0 / 3 + 5 * x / 3 ? (3 * x - y - 1) * (3 * x - y - 1) / 8
                                             : (x * x + 6 * x * y - 4 * x - 3 * y * y + 1) / 12;
            EXPECT_GT(gap, 0);
        }
        EXPECT_NEAR(regionBurnFraction(x, y) - numeric, gap, 1e-9) << x << "," << y;
    }
    EXPECT_GT(inFive, 20);
}

TEST(BurnFraction, AgreesAcrossRegionBoundaries) {
    // boundary lines of the region split, as y = f(x)
    std::vector<std::function<double(double)>> lines{
        [](double x) { return 0.5 - 2 * x; },  [](double x) { return 0.25 - x / 2; },
        [](double x) { return -0.5 + 2 * x; }, [](double x) { return -1.0 / 3 + 5 * x / 3; },
        [](double x) { return 0.2 - x; }};
    int checked = 0;
    for (const auto& f : lines)
        for (int k = 1; k < 400; ++k) {
            double x = 0.5 * k / 400, y = f(x);
            double e = 1e-7;
            if (y - e < 0 || y + e > x || x > 0.5) continue;
            Region lo = thresholds(x, y - e).region, hi = thresholds(x, y + e).region;
            if (lo == hi) continue;
            EXPECT_NEAR(profileBurnClosedForm(lo, x, y), profileBurnClosedForm(hi, x, y), 1e-12)
                << regionName(lo) << "/" << regionName(hi) << " at " << x << "," << y;
            ++checked;
        }
    EXPECT_GT(checked, 100);
}

TEST(UpperBound, RegionConstants) {
    auto res = upperBoundTheorem1(1e-10);
    ASSERT_EQ(res.cValues.size(), 8u);
    for (auto& [label, v] : res.cValues) EXPECT_NEAR(v, constant(label).value(), 1e-6) << label;
    EXPECT_NEAR(res.cValues["C1a"], 0.005733, 1e-6);
    EXPECT_NEAR(res.cValues["C4"], 0.013139, 1e-6);
    EXPECT_NEAR(res.total, 67243.0 / 105300, 1e-6);
    EXPECT_LT(res.total, 0.6386);
}

TEST(UpperBound, RegionsTileTheTriangle) {
    double area = 0;
    for (auto& [label, parts] : regionParts())
        for (auto& part : parts)
            area += integrate2d([](double, double) { return 1.0; }, part.a, part.b, part.lo, part.hi, 1e-12);
    EXPECT_NEAR(area, 1.0 / 8, 1e-10);
}

TEST(UpperBound, ProfileIntegralOverTheTriangle) {
    // midpoint rule on the numeric burn fraction, no region formulas involved
    const int N = 200;
    const double h = 0.5 / N;
    double sum = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            double x = (i + 0.5) * h, y = (j + 0.5) * h;
            sum += (j == i ? 0.5 : 1.0) * h * h * burnFractionNumeric(x, y, 1e-9);
        }
    double grid = 1 - 8 * sum;
    EXPECT_NEAR(grid, 0.642, 1e-3);
    EXPECT_GT(grid - constant("upper").value(), 2e-3);
    auto r = upperBoundFromProfile(1e-9);
    EXPECT_NEAR(r.total, constant("upper_profile").value(), 1e-6);
    EXPECT_NEAR(r.cValues.at("C5"), constant("C5_profile").value(), 1e-6);
    EXPECT_EQ(constant("upper_profile").num * 1000, 642 * constant("upper_profile").den);
}

TEST(LowerBound, WedgeAverage) {
    EXPECT_NEAR(lowerBoundIntegral(), 5.0 / 8, 1e-9);
    EXPECT_DOUBLE_EQ(wedgeSavedFraction(0, 0), 0.25);
    // mirrored triangle 0 <= x <= y <= 1/2 with swapped roles
    double mirrored = 8 * integrate2d([](double x, double y) { return wedgeSavedFraction(y, x); }, 0, 0.5,
                                      [](double x) { return x; }, [](double) { return 0.5; }, 1e-12);
    EXPECT_NEAR(mirrored, 5.0 / 8, 1e-9);
}

TEST(LowerBound, BurnCountFromSpheres) {
    EXPECT_EQ(lemma1BurnLowerBound(3, 0, 0), 5);
    EXPECT_GE(9 - solveOptimal(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{}).sn, 5);
    EXPECT_NEAR(static_cast<double>(lemma1BurnLowerBound(200, 0, 0)) / (200.0 * 200.0), 0.6, 0.02);
    for (int n : {5, 8, 13}) {
        Lattice g = Lattice::finiteSquare(n);
        for (Vertex v : g.vertices()) {
            long long ref = 0;
            for (int r = 1; r <= 2 * n; ++r) {
                long long cnt = 0;
                for (Vertex u : g.vertices()) cnt += std::abs(u.a - v.a) + std::abs(u.b - v.b) == r;
                ref += std::max(cnt - r, 0LL);
            }
            EXPECT_EQ(lemma1BurnLowerBound(n, v.a, v.b), ref);
            EXPECT_LE(ref, static_cast<long long>(n) * n);
        }
    }
}

TEST(LowerBound, SimulationNeverBeatsTheBound) {
    const int n = 101;
    Lattice g = Lattice::finiteSquare(n);
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> c(g.lo(), g.hi());
    double savedSum = 0;
    for (int i = 0; i < 200; ++i) {
        Vertex v{c(rng), c(rng)};
        long long burnt = wedgeBurnt(n, v);
        EXPECT_GE(burnt, lemma1BurnLowerBound(n, v.a, v.b) - 4 * n) << toString(v);
        savedSum += 1.0 - static_cast<double>(burnt) / (n * n);
    }
    double mean = savedSum / 200;
    EXPECT_GE(mean, 5.0 / 8 - 0.02);
    EXPECT_LE(mean, 67243.0 / 105300 + 0.02);
}

TEST(Estimators, UnimpededFireFillsTheBall) {
    Lattice lat = Lattice::infiniteSquare(60);
    GameState s(lat, {{0, 0}}, BudgetSchedule{});
    IdleStrategy idle;
    run(s, idle, 50);
    EXPECT_DOUBLE_EQ(containmentRadiusRatio(s, {0, 0}, 50), 1.0);
    auto r = savedRatios(s, {0, 0}, {10, 50});
    EXPECT_DOUBLE_EQ(r[0], 0.0);
    EXPECT_DOUBLE_EQ(r[1], 0.0);
    EXPECT_EQ(codeOf([&] { containmentRadiusRatio(s, {0, 0}, 0); }), "TraceTooShort");
}

TEST(Estimators, HorizonAndWindowErrors) {
    GameState s(Lattice::infiniteSquare(60), {{0, 0}}, BudgetSchedule{});
    IdleStrategy idle;
    EXPECT_EQ(codeOf([&] { survivingRateEstimate(s, idle, {0, 0}, {40}, 20); }), "HorizonTooSmall");
    EXPECT_EQ(codeOf([&] { savedRatios(s, {0, 0}, {61}); }), "HorizonTooSmall");
}

TEST(Estimators, RatiosStabilize) {
    GameState s(Lattice::infiniteSquare(420), {{0, 0}}, BudgetSchedule{});
    SquareWedge w({0, 0}, 0);
    std::vector<int> radii;
    for (int i = 100; i <= 200; i += 10) radii.push_back(i);
    auto est = survivingRateEstimate(s, w, {0, 0}, radii, 400);
    auto [lo, hi] = std::minmax_element(est.ratios.begin() + 7, est.ratios.end());
    EXPECT_LE(*hi - *lo, 0.01);
}

TEST(Estimators, TernaryTreeSavesHalf) {
    // fire at the root; any fire neighbor is a child, so every choice is optimal
    GameState s(Lattice::daryTree(3, 12), {{0, 0}}, BudgetSchedule{});
    RandomStrategy play(3, 1.0);
    auto est = survivingRateEstimate(s, play, {0, 0}, {6, 12}, 12);
    EXPECT_NEAR(est.ratios[1], 0.5, 0.05);
}

TEST(CenterInvariance, GapShrinksWithRadius) {
    GameState s(Lattice::infiniteSquare(420), {{0, 0}}, BudgetSchedule{});
    SquareWedge w({0, 0}, 0);
    run(s, w, 400);
    std::vector<int> radii{50, 100, 150, 200};
    auto same = centerInvarianceCheck(s, {0, 0}, {0, 0}, radii);
    EXPECT_EQ(same.tailMax, 0.0);
    auto g = centerInvarianceCheck(s, {0, 0}, {5, 0}, radii);
    EXPECT_LE(g.tailMax, 0.05);
    EXPECT_LT(g.gaps.back(), g.gaps.front());

    GameState h(Lattice::hexagonal(420), {{0, 0}}, BudgetSchedule{});
    HexTwoRay two({0, 0});
    run(h, two, 400);
    auto gh = centerInvarianceCheck(h, {0, 0}, {4, 3}, radii);
    EXPECT_LT(gh.gaps.back(), gh.gaps.front());
}

TEST(CenterInvariance, RefusesTrees) {
    GameState s(Lattice::daryTree(3, 8), {{0, 0}}, BudgetSchedule{});
    EXPECT_EQ(codeOf([&] { centerInvarianceCheck(s, {0, 0}, {1, 0}, {4, 8}); }), "GrowthHypothesis");
}

TEST(Translation, SolverFoundContainmentTranslates) {
    Lattice tri = Lattice::triangular(7);
    auto found = verifyContainmentSearch(tri, {{0, 0}}, BudgetSchedule{4, {}}, 4);
    ASSERT_TRUE(found.containable);
    auto tr = translateTriToHex(found.witness, BudgetSchedule{4, {}}, {{0, 0}});
    EXPECT_EQ(tr.hexSchedule.base, 2);
    auto rep = translationAudit(tr);
    EXPECT_TRUE(rep.ok()) << rep.failure;
    EXPECT_TRUE(rep.parityOk);
    EXPECT_LE(rep.hexTurns, 2 * rep.triTurns + 1);
    EXPECT_LE(rep.hexBurnt, 2 * rep.triBurnt + rep.firefighters);
    if (found.witness.size() <= 2) {
        EXPECT_LE(rep.hexTurns, 5);
    }
}

TEST(Translation, OddCountCanExceedTriangularBurnt) {
    // six firefighters surround a single fire at once: b = 1, f = 6
    std::vector<std::vector<Vertex>> ring{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};
    auto tr = translateTriToHex(ring, BudgetSchedule{6, {}}, {{0, 0}});
    auto rep = translationAudit(tr);
    EXPECT_TRUE(rep.ok()) << rep.failure;
    EXPECT_EQ(rep.triBurnt, 1);
    EXPECT_EQ(rep.hexBurnt, 4);
    EXPECT_EQ(rep.hexBurntOdd, 3);
    EXPECT_FALSE(rep.oddWithinB);
}
