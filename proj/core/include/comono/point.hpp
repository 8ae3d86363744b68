#pragma once

#include <cmath>
#include <ostream>

namespace comono {

/// A point of the plane. Carries payoffs (f,g), lifted pairs (xi,eta) and curve points.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    constexpr Point2 operator*(double s) const { return {s * x, s * y}; }
    constexpr bool operator==(const Point2&) const = default;

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Point2 operator*(double s, const Point2& p) { return p * s; }

/// Max-coordinate (Chebyshev) distance.
inline double max_distance(const Point2& a, const Point2& b) {
    return std::fmax(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << '(' << p.x << ", " << p.y << ')';
}

}  // namespace comono
