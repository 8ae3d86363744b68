#pragma once

#include <initializer_list>
#include <vector>

namespace comono {

struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// Finite union of closed subintervals of [0,1], kept sorted, disjoint and merged.
/// Zero-length pieces are dropped: they carry no Lebesgue mass.
class IntervalSet {
  public:
    IntervalSet() = default;

    /// Normalizes arbitrary input pieces. Throws InvalidEvent if a piece is non-finite,
    /// reversed, or leaves [0,1].
    explicit IntervalSet(std::vector<Interval> pieces);
    IntervalSet(std::initializer_list<Interval> pieces)
        : IntervalSet(std::vector<Interval>(pieces)) {}

    const std::vector<Interval>& pieces() const noexcept { return pieces_; }
    bool empty() const noexcept { return pieces_.empty(); }

    /// Lebesgue measure, summed with error-free transformations so the result is
    /// the exact sum of exact differences, rounded once.
    double measure() const;

    bool contains(const IntervalSet& other) const;

    bool operator==(const IntervalSet&) const = default;

  private:
    std::vector<Interval> pieces_;
};

}  // namespace comono
