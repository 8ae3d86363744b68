#include "comono/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "comono/errors.hpp"

namespace comono {

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
    for (const auto& iv : pieces) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) throw InvalidEvent("interval endpoint is not finite");
        if (iv.lo > iv.hi) throw InvalidEvent("interval is reversed");
        if (iv.lo < 0.0 || iv.hi > 1.0) throw InvalidEvent("interval leaves [0,1]");
    }
    std::erase_if(pieces, [](const Interval& iv) { return iv.lo == iv.hi; });
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& iv : pieces) {
        if (!pieces_.empty() && iv.lo <= pieces_.back().hi) {
            pieces_.back().hi = std::max(pieces_.back().hi, iv.hi);
        } else {
            pieces_.push_back(iv);
        }
    }
}

namespace {

// Knuth's TwoSum: a + b == s + err exactly.
inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    const double bv = s - a;
    err = (a - (s - bv)) + (b - bv);
}

}  // namespace

double IntervalSet::measure() const {
    // Accumulate every hi and -lo as an unevaluated sum (sum + carry).
    double sum = 0.0;
    double carry = 0.0;
    auto add = [&](double v) {
        double s, e;
        two_sum(sum, v, s, e);
        sum = s;
        carry += e;
    };
    for (const auto& iv : pieces_) {
        add(iv.hi);
        add(-iv.lo);
    }
    return sum + carry;
}

bool IntervalSet::contains(const IntervalSet& other) const {
    auto it = pieces_.begin();
    for (const auto& iv : other.pieces_) {
        while (it != pieces_.end() && it->hi < iv.hi) ++it;
        if (it == pieces_.end() || it->lo > iv.lo) return false;
    }
    return true;
}

}  // namespace comono
