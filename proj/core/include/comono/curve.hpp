#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "comono/gauge.hpp"
#include "comono/point.hpp"

namespace comono {

enum class SegmentKind { vertical, horizontal, slope_half };

std::string_view to_string(SegmentKind kind);
/// Inverse of to_string; throws InvalidInput on unknown names.
SegmentKind segment_kind_from_string(std::string_view name);

/// A piece of the staircase curve E, oriented in traversal order (a <= b coordinatewise).
struct Segment {
    Point2 a;
    Point2 b;
    SegmentKind kind;
    int stage;

    bool operator==(const Segment&) const = default;
};

/// The four segments a stage contributes, in traversal order.
///  stage 1: (-4,-4)->(-4,-2)->(0,0)->(4,2)->(4,4)
///  stage n: the two negative-side pieces (-2^(n+1),-2^(n+1))->(-2^(n+1),-2^n)->(-2^n,-2^n)
///           followed by the positive-side pieces (2^n,2^n)->(2^(n+1),2^n)->(2^(n+1),2^(n+1)).
std::array<Segment, 4> stage_segments(StageIndex stage);

/// All segments of E through maxStage in traversal order, from -(2^(n+1),2^(n+1))
/// to (2^(n+1),2^(n+1)). Contains 4*maxStage segments.
std::vector<Segment> curve_segments(StageIndex max_stage);

/// Max-coordinate distance from p to a segment.
double segment_distance(const Point2& p, const Segment& s);

/// True iff p is within tol (max-coordinate metric) of E, searching stages up to
/// scale_index(gauge(p)) + 1.
bool on_curve(const Point2& p, double tol);

}  // namespace comono
