#include "comono/gauge.hpp"

#include <array>
#include <cmath>
#include <string>

#include "comono/errors.hpp"

namespace comono {

StageIndex::StageIndex(int n) : n_(n) {
    if (n < 1 || n > kMaxStage) {
        throw InvalidInput("stage index " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxStage) + "]");
    }
}

double gauge(const Point2& p) {
    if (!p.finite()) throw InvalidInput("gauge: non-finite point");
    return std::fmax(std::fabs(p.x) * 0.25, std::fabs(skew_coordinate(p)));
}

namespace {

// P_1 vertices in counter-clockwise order.
constexpr std::array<Point2, 4> kUnitBallVertices{{{-4, -4}, {4, 2}, {4, 4}, {-4, -2}}};

// q in triangle (v0, v1, v2) by Cramer's rule on q - v0 = s (v1 - v0) + t (v2 - v0).
bool in_triangle(const Point2& q, const Point2& v0, const Point2& v1, const Point2& v2) {
    const Point2 e1 = v1 - v0;
    const Point2 e2 = v2 - v0;
    const Point2 r = q - v0;
    const double det = e1.x * e2.y - e1.y * e2.x;
    const double s = (r.x * e2.y - r.y * e2.x) / det;
    const double t = (e1.x * r.y - e1.y * r.x) / det;
    return s >= 0.0 && t >= 0.0 && s + t <= 1.0;
}

bool in_unit_ball_hull(const Point2& q) {
    const auto& v = kUnitBallVertices;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (in_triangle(q, v[0], v[i], v[i + 1])) return true;
    }
    return false;
}

}  // namespace

double gauge_oracle(const Point2& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("gauge_oracle: tol must be positive");
    if (!p.finite()) throw InvalidInput("gauge_oracle: non-finite point");
    if (p.x == 0.0 && p.y == 0.0) return 0.0;

    auto inside = [&](double t) { return in_unit_ball_hull(p * (1.0 / t)); };

    double hi = 1.0;
    while (!inside(hi)) hi *= 2.0;
    double lo = hi;
    while (lo > 0.0 && inside(lo)) lo *= 0.5;
    // Invariant: p/hi inside, p/lo outside.
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        (inside(mid) ? hi : lo) = mid;
    }
    return lo + 0.5 * (hi - lo);
}

StageIndex scale_index(double r) {
    if (!std::isfinite(r) || r < 0.0) throw InvalidInput("scale_index: radius must be finite and >= 0");
    if (r > kMaxGauge) throw InvalidInput("scale_index: radius exceeds the supported stage range");
    if (r <= 1.0) return StageIndex(1);
    int exp = 0;
    std::frexp(r, &exp);  // r in [2^(exp-1), 2^exp)
    // Candidate n-1 = exp - 1 when r is exactly 2^(exp-1), else exp.
    int n = exp + 1;
    if (r <= std::ldexp(1.0, exp - 1)) n = exp;
    return StageIndex(n);
}

bool in_parallelogram(const Point2& p, StageIndex n) { return gauge(p) <= n.radius(); }

}  // namespace comono
