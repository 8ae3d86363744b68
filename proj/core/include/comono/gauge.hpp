#pragma once

#include <cmath>

#include "comono/point.hpp"

namespace comono {

/// Largest stage of the curve we construct. 2^(kMaxStage+1) is still a finite double.
inline constexpr int kMaxStage = 1020;

/// Inputs whose gauge exceeds this are rejected (they would need a stage beyond kMaxStage).
inline constexpr double kMaxGauge = 0x1p1019;

/// Index n of the parallelogram P_n = 2^(n-1) P_1. Always in [1, kMaxStage].
class StageIndex {
  public:
    /// Throws InvalidInput outside [1, kMaxStage].
    explicit StageIndex(int n);

    int value() const noexcept { return n_; }

    /// Half-width 2^(n+1) of P_n; its vertical sides sit at x = -/+ half_width().
    double half_width() const noexcept { return std::ldexp(1.0, n_ + 1); }

    /// Gauge radius 2^(n-1) of P_n.
    double radius() const noexcept { return std::ldexp(1.0, n_ - 1); }

    auto operator<=>(const StageIndex&) const = default;

  private:
    int n_;
};

/// Minkowski gauge of p for the unit ball P_1 = conv{(-4,-4), (-4,-2), (4,2), (4,4)}:
/// max(|x|/4, |y - 3x/4|). Throws InvalidInput on non-finite input.
double gauge(const Point2& p);

/// The skew coordinate y - 3x/4, constant along lines parallel to the slanted sides of P_1.
inline double skew_coordinate(const Point2& p) { return p.y - 0.75 * p.x; }

/// Bisection oracle for the gauge that only uses hull membership of p/t in P_1's vertex set,
/// solved as barycentric systems over vertex triangles. Result within tol of the true gauge
/// (or as close as double resolution allows). Throws InvalidInput for tol <= 0.
double gauge_oracle(const Point2& p, double tol);

/// Smallest n >= 1 with r <= 2^(n-1). Exact at powers of two.
/// Throws InvalidInput for negative, non-finite, or over-cap r.
StageIndex scale_index(double r);

/// P_n membership: gauge(p) <= 2^(n-1).
bool in_parallelogram(const Point2& p, StageIndex n);

}  // namespace comono
