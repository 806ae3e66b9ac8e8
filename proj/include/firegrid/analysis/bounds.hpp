#ifndef FIREGRID_ANALYSIS_BOUNDS_HPP
#define FIREGRID_ANALYSIS_BOUNDS_HPP

#include <array>
#include <cstdio>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "firegrid/lattice.hpp"

namespace firegrid {

struct ExactConstant {
    std::string label;
    long long num;
    long long den;
    std::string note;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Region contributions of the upper-bound integral and the two limits.
inline const std::vector<ExactConstant>& constantsTable() {
    static const std::vector<ExactConstant> t{
        {"C1a", 43, 7500, "region 1a contribution"},
        {"C1b", 459563, 89842500, "region 1b contribution"},
        {"C1c", 434549, 766656000, "region 1c contribution"},
        {"C2a", 358687, 157907178, "region 2a contribution"},
        {"C2b", 478988221, 280723872000, "region 2b contribution"},
        {"C3", 2807, 576000, "region 3 contribution"},
        {"C4", 473, 36000, "region 4 contribution"},
        {"C5", 1907, 162000, "region 5 contribution"},
        {"upper", 67243, 105300, "1 - 8 * sum of region contributions"},
        {"C5_profile", 1991, 175500, "region 5 contribution integrated from the exact profile"},
        {"upper_profile", 321, 500, "1 - 8 * sum with C5_profile in place of C5"},
        {"lower", 5, 8, "wedge strategy average over all starts"},
        {"rho_square_infinite", 1, 4, "infinite square grid"},
        {"rho_hex_two_ray", 2, 3, "two rays on the hexagonal grid"},
    };
    return t;
}

inline const ExactConstant& constant(const std::string& label) {
    for (const auto& c : constantsTable())
        if (c.label == label) return c;
    throw DomainError("UnknownConstant", "no constant " + label);
}

enum class Region { R1a, R1b, R1c, R2a, R2b, R3, R4, R5 };

inline std::string regionName(Region r) {
    static const char* names[] = {"1a", "1b", "1c", "2a", "2b", "3", "4", "5"};
    return names[static_cast<int>(r)];
}

inline int regionCase(Region r) {
    static const int c[] = {1, 1, 1, 2, 2, 3, 4, 5};
    return c[static_cast<int>(r)];
}

struct Thresholds {
    double tE, tN, tS, tW, tNE, tSE, tNW, tSW;
    double t;  // first time the sphere size drops below the radius
    Region region;
};

inline void checkStart(double x, double y) {
    const double eps = 1e-12;
    if (!(y >= -eps && y <= x + eps && x <= 0.5 + eps))
        throw DomainError("OutOfTriangle", "start (" + std::to_string(x) + "," + std::to_string(y) +
                                               ") is not in 0 <= y <= x <= 1/2");
}

inline Thresholds thresholds(double x, double y) {
    checkStart(x, y);
    Thresholds th{0.5 - x, 0.5 - y, 0.5 + y, 0.5 + x, 1 - x - y, 1 - x + y, 1 + x - y, 1 + x + y, 0, Region::R1a};
    if (y <= 0.5 - 2 * x) {
        if (y <= 0.2 - x)
            th.region = Region::R1a;
        else if (y >= -1.0 / 3 + 5 * x / 3)
            th.region = Region::R1b;
        else
            th.region = Region::R1c;
    } else if (y <= 0.25 - x / 2) {
        if (y >= -0.5 + 2 * x)
            th.region = y >= -1.0 / 3 + 5 * x / 3 ? Region::R2a : Region::R2b;
        else
            th.region = Region::R3;
    } else {
        th.region = y <= -0.5 + 2 * x ? Region::R4 : Region::R5;
    }
    switch (th.region) {
        case Region::R1a: th.t = 0.8; break;
        case Region::R1b:
        case Region::R2a: th.t = 0.75 + x / 4 + y / 4; break;
        // the profile crosses r after t_W here, before or after t_SE
        case Region::R5: th.t = y >= -1.0 / 3 + 5 * x / 3 ? 0.75 + x / 4 + y / 4 : 2.0 / 3 + 2 * x / 3; break;
        default: th.t = 2.0 / 3 + 2 * x / 3; break;
    }
    return th;
}

// |N_rn(a,b)|/n as eight affine pieces c0 + c1 r on consecutive intervals.
struct ProfilePiece {
    double lo, hi, c0, c1;
};

struct BoundProfile {
    Thresholds th;
    std::array<ProfilePiece, 8> pieces;

    double operator()(double r) const {
        if (r < 0 || r > pieces.back().hi) return 0.0;
        for (const auto& p : pieces)
            if (r <= p.hi) return p.c0 + p.c1 * r;
        return 0.0;
    }
};

inline BoundProfile sphereSizeProfile(double x, double y) {
    Thresholds th = thresholds(x, y);
    BoundProfile p{th, {}};
    auto& q = p.pieces;
    const double s = x + y;
    switch (regionCase(th.region)) {
        case 1:
            q = {{{0, th.tE, 0, 4}, {th.tE, th.tN, 1 - 2 * x, 2}, {th.tN, th.tS, 2 - 2 * x - 2 * y, 0},
                  {th.tS, th.tW, 3 - 2 * x, -2}, {th.tW, th.tNE, 4, -4}, {th.tNE, th.tSE, 3 + s, -3},
                  {th.tSE, th.tNW, 2 + 2 * x, -2}, {th.tNW, th.tSW, 1 + s, -1}}};
            break;
        case 2:
            q = {{{0, th.tE, 0, 4}, {th.tE, th.tN, 1 - 2 * x, 2}, {th.tN, th.tS, 2 - 2 * x - 2 * y, 0},
                  {th.tS, th.tNE, 3 - 2 * x, -2}, {th.tNE, th.tW, 2 - x + y, -1}, {th.tW, th.tSE, 3 + s, -3},
                  {th.tSE, th.tNW, 2 + 2 * x, -2}, {th.tNW, th.tSW, 1 + s, -1}}};
            break;
        case 3:
            q = {{{0, th.tE, 0, 4}, {th.tE, th.tN, 1 - 2 * x, 2}, {th.tN, th.tS, 2 - 2 * x - 2 * y, 0},
                  {th.tS, th.tNE, 3 - 2 * x, -2}, {th.tNE, th.tSE, 2 - x + y, -1}, {th.tSE, th.tW, 1, 0},
                  {th.tW, th.tNW, 2 + 2 * x, -2}, {th.tNW, th.tSW, 1 + s, -1}}};
            break;
        case 4:
            q = {{{0, th.tE, 0, 4}, {th.tE, th.tN, 1 - 2 * x, 2}, {th.tN, th.tNE, 2 - 2 * x - 2 * y, 0},
                  {th.tNE, th.tS, 1 - s, 1}, {th.tS, th.tSE, 2 - x + y, -1}, {th.tSE, th.tW, 1, 0},
                  {th.tW, th.tNW, 2 + 2 * x, -2}, {th.tNW, th.tSW, 1 + s, -1}}};
            break;
        default:
            q = {{{0, th.tE, 0, 4}, {th.tE, th.tN, 1 - 2 * x, 2}, {th.tN, th.tNE, 2 - 2 * x - 2 * y, 0},
                  {th.tNE, th.tS, 1 - s, 1}, {th.tS, th.tW, 2 - x + y, -1}, {th.tW, th.tSE, 3 + s, -3},
                  {th.tSE, th.tNW, 2 + 2 * x, -2}, {th.tNW, th.tSW, 1 + s, -1}}};
            break;
    }
    return p;
}

inline double burnClosedForm(Region r, double x, double y) {
    switch (r) {
        case Region::R1a: return 0.6 - 2 * x * x - 2 * y * y;
        case Region::R1b:
        case Region::R2a:
            return 5.0 / 8 - x / 4 - 11 * x * x / 8 - y / 4 - 11 * y * y / 8 + 5 * x * y / 4;
        // tabulated region 5 formula; it exceeds the profile integral by (3x - y - 1)^2 / 8
        case Region::R5: return 0.75 - x - x * x / 4 - 5 * y * y / 4 + x * y / 2;
        default: return 2.0 / 3 - 2 * x / 3 - x * x / 3 - y * y;
    }
}

inline double regionBurnFraction(double x, double y) { return burnClosedForm(thresholds(x, y).region, x, y); }

// Closed form of the integral of max(profile - r, 0). Agrees with burnClosedForm
// outside region 5; inside, region 5 splits along y = -1/3 + 5x/3.
inline double profileBurnClosedForm(Region r, double x, double y) {
    if (r != Region::R5) return burnClosedForm(r, x, y);
    return burnClosedForm(y >= -1.0 / 3 + 5 * x / 3 ? Region::R1b : Region::R3, x, y);
}

inline double profileBurnFraction(double x, double y) { return profileBurnClosedForm(thresholds(x, y).region, x, y); }

inline constexpr double kQuadratureAbsTol = 1e-8;

inline std::string fmtErr(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", e);
    return buf;
}

struct QuadratureError : DomainError {
    QuadratureError(const std::string& what, double achieved)
        : DomainError("QuadratureNotConverged", what + " (achieved error " + fmtErr(achieved) + ")") {}
};

inline double integrate1d(const std::function<double(double)>& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    double err = 0, l1 = 0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, tol, &err, &l1);
    // the error estimate floors near 1e-10 even on polynomials; 1e-8 absolute is the contract
    if (err > std::max(tol * l1, kQuadratureAbsTol)) throw QuadratureError("1-D quadrature", err);
    return v;
}

// integral over x in [a,b], y in [lo(x), hi(x)]
inline double integrate2d(const std::function<double(double, double)>& f, double a, double b,
                          const std::function<double(double)>& lo, const std::function<double(double)>& hi,
                          double tol) {
    return integrate1d(
        [&](double x) { return integrate1d([&](double y) { return f(x, y); }, lo(x), hi(x), tol * 1e-2); }, a, b,
        tol);
}

// Integral of max(|N_r|/n - r, 0) over r, split at the profile breakpoints.
inline double burnFractionNumeric(double x, double y, double tol = 1e-12) {
    BoundProfile p = sphereSizeProfile(x, y);
    double total = 0;
    for (const auto& piece : p.pieces) {
        auto f = [&](double r) { return std::max(piece.c0 + piece.c1 * r - r, 0.0); };
        double lo = piece.lo, hi = piece.hi;
        double k = piece.c1 - 1;
        // split at the zero so each part is smooth
        if (k != 0) {
            double z = -piece.c0 / k;
            if (z > lo && z < hi) {
                total += integrate1d(f, lo, z, tol) + integrate1d(f, z, hi, tol);
                continue;
            }
        }
        total += integrate1d(f, lo, hi, tol);
    }
    return total;
}

struct RegionPart {
    double a, b;
    std::function<double(double)> lo, hi;
};

inline std::map<std::string, std::vector<RegionPart>> regionParts() {
    auto c = [](double v) { return [v](double) { return v; }; };
    auto ident = [](double x) { return x; };
    auto l1 = [](double x) { return 0.5 - 2 * x; };       // t_W = t_NE
    auto l2 = [](double x) { return 0.25 - x / 2; };      // t_S = t_NE
    auto l3 = [](double x) { return -0.5 + 2 * x; };      // t_W = t_SE
    auto l4 = [](double x) { return -1.0 / 3 + 5 * x / 3; };  // t = t_SE
    auto l5 = [](double x) { return 0.2 - x; };           // t = t_NE
    return {
        {"C1a", {{0, 0.1, c(0), ident}, {0.1, 0.2, c(0), l5}}},
        {"C1b", {{0.1, 1.0 / 6, l5, ident}, {1.0 / 6, 0.2, l5, l1}, {0.2, 5.0 / 22, l4, l1}}},
        {"C1c", {{0.2, 5.0 / 22, c(0), l4}, {5.0 / 22, 0.25, c(0), l1}}},
        {"C2a", {{1.0 / 6, 5.0 / 22, l1, l2}, {5.0 / 22, 7.0 / 26, l4, l2}}},
        {"C2b", {{5.0 / 22, 0.25, l1, l4}, {0.25, 7.0 / 26, l3, l4}, {7.0 / 26, 0.3, l3, l2}}},
        {"C3", {{0.25, 0.3, c(0), l3}, {0.3, 0.5, c(0), l2}}},
        {"C4", {{0.3, 0.5, l2, l3}}},
        {"C5", {{1.0 / 6, 0.3, l2, ident}, {0.3, 0.5, l3, ident}}},
    };
}

inline Region regionOfConstant(const std::string& label) {
    static const std::map<std::string, Region> m{{"C1a", Region::R1a}, {"C1b", Region::R1b}, {"C1c", Region::R1c},
                                                 {"C2a", Region::R2a}, {"C2b", Region::R2b}, {"C3", Region::R3},
                                                 {"C4", Region::R4},   {"C5", Region::R5}};
    return m.at(label);
}

struct UpperBoundResult {
    std::map<std::string, double> cValues;
    double total = 0;
};

inline UpperBoundResult upperBoundTheorem1(double tol = 1e-10) {
    UpperBoundResult out;
    double sum = 0;
    for (auto& [label, parts] : regionParts()) {
        Region r = regionOfConstant(label);
        double v = 0;
        for (auto& part : parts)
            v += integrate2d([r](double x, double y) { return burnClosedForm(r, x, y); }, part.a, part.b, part.lo,
                             part.hi, tol);
        out.cValues[label] = v;
        sum += v;
    }
    out.total = 1 - 8 * sum;
    return out;
}

// Same sum with region 5 integrated from the exact profile, split along
// y = -1/3 + 5x/3 where the crossing passes t_SE.
inline UpperBoundResult upperBoundFromProfile(double tol = 1e-10) {
    UpperBoundResult out = upperBoundTheorem1(tol);
    auto ident = [](double x) { return x; };
    auto l2 = [](double x) { return 0.25 - x / 2; };
    auto l3 = [](double x) { return -0.5 + 2 * x; };
    auto l4 = [](double x) { return -1.0 / 3 + 5 * x / 3; };
    auto upper = [](double x, double y) { return burnClosedForm(Region::R1b, x, y); };
    auto lower = [](double x, double y) { return burnClosedForm(Region::R3, x, y); };
    double c5 = integrate2d(upper, 1.0 / 6, 7.0 / 26, l2, ident, tol) + integrate2d(upper, 7.0 / 26, 0.5, l4, ident, tol) +
                integrate2d(lower, 7.0 / 26, 0.3, l2, l4, tol) + integrate2d(lower, 0.3, 0.5, l3, l4, tol);
    out.total += 8 * (out.cValues["C5"] - c5);
    out.cValues["C5"] = c5;
    return out;
}

inline double lowerBoundIntegral(double tol = 1e-12) {
    return 8 * integrate2d([](double x, double y) { return (0.5 - y) * (0.5 - y) + x + y; }, 0, 0.5,
                           [](double) { return 0.0; }, [](double x) { return x; }, tol);
}

// Sum over r of max(|N_r(a,b)| - r, 0) on the n x n grid.
inline long long lemma1BurnLowerBound(int n, int a, int b) {
    Lattice lat = Lattice::finiteSquare(n);
    lat.check({a, b});
    long long total = 0;
    for (int r = 1; r <= 2 * n; ++r) total += std::max(lat.sphereSize({a, b}, r) - r, 0LL);
    return total;
}

}  // namespace firegrid

#endif
