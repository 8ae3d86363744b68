#include "comono/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "comono/errors.hpp"

namespace comono {

std::string_view to_string(SegmentKind kind) {
    switch (kind) {
        case SegmentKind::vertical: return "vertical";
        case SegmentKind::horizontal: return "horizontal";
        case SegmentKind::slope_half: return "slope-half";
    }
    return "unknown";
}

SegmentKind segment_kind_from_string(std::string_view name) {
    if (name == "vertical") return SegmentKind::vertical;
    if (name == "horizontal") return SegmentKind::horizontal;
    if (name == "slope-half") return SegmentKind::slope_half;
    throw InvalidInput("unknown segment kind '" + std::string(name) + "'");
}

std::array<Segment, 4> stage_segments(StageIndex stage) {
    const int n = stage.value();
    if (n == 1) {
        return {{{{-4, -4}, {-4, -2}, SegmentKind::vertical, 1},
                 {{-4, -2}, {0, 0}, SegmentKind::slope_half, 1},
                 {{0, 0}, {4, 2}, SegmentKind::slope_half, 1},
                 {{4, 2}, {4, 4}, SegmentKind::vertical, 1}}};
    }
    const double outer = stage.half_width();  // 2^(n+1)
    const double inner = 0.5 * outer;         // 2^n
    return {{{{-outer, -outer}, {-outer, -inner}, SegmentKind::vertical, n},
             {{-outer, -inner}, {-inner, -inner}, SegmentKind::horizontal, n},
             {{inner, inner}, {outer, inner}, SegmentKind::horizontal, n},
             {{outer, inner}, {outer, outer}, SegmentKind::vertical, n}}};
}

std::vector<Segment> curve_segments(StageIndex max_stage) {
    const int m = max_stage.value();
    std::vector<Segment> out(4 * static_cast<std::size_t>(m));
    // Stage k's negative pieces sit m-k pairs from the front; positive pieces mirror them.
    for (int k = 1; k <= m; ++k) {
        const auto s = stage_segments(StageIndex(k));
        const std::size_t neg = 2 * static_cast<std::size_t>(m - k);
        const std::size_t pos = out.size() - 2 - neg;
        out[neg] = s[0];
        out[neg + 1] = s[1];
        out[pos] = s[2];
        out[pos + 1] = s[3];
    }
    return out;
}

double segment_distance(const Point2& p, const Segment& s) {
    const Point2 d = s.b - s.a;
    const Point2 r = p - s.a;
    auto at = [&](double t) {
        t = std::clamp(t, 0.0, 1.0);
        return std::fmax(std::fabs(r.x - t * d.x), std::fabs(r.y - t * d.y));
    };
    // The objective is convex and piecewise linear in t; its minimum sits at an
    // endpoint, a zero of either coordinate term, or a crossing of the two terms.
    double best = std::fmin(at(0.0), at(1.0));
    if (d.x != 0.0) best = std::fmin(best, at(r.x / d.x));
    if (d.y != 0.0) best = std::fmin(best, at(r.y / d.y));
    if (d.x != d.y) best = std::fmin(best, at((r.x - r.y) / (d.x - d.y)));
    if (d.x != -d.y) best = std::fmin(best, at((r.x + r.y) / (d.x + d.y)));
    return best;
}

bool on_curve(const Point2& p, double tol) {
    if (!p.finite()) throw InvalidInput("on_curve: non-finite point");
    if (!(tol >= 0.0)) throw InvalidInput("on_curve: tol must be >= 0");
    const int top = std::min(scale_index(gauge(p)).value() + 1, kMaxStage);
    for (int k = 1; k <= top; ++k) {
        for (const auto& seg : stage_segments(StageIndex(k))) {
            if (segment_distance(p, seg) <= tol) return true;
        }
    }
    return false;
}

}  // namespace comono
