#include "comono/decomposition.hpp"

#include <cmath>

#include "comono/errors.hpp"

namespace comono {

Decomposition decompose(const Point2& p) {
    if (!p.finite()) throw InvalidInput("decompose: non-finite point");
    // |skew| <= g and |x| <= 4g, with the same rounding the gauge uses, so the
    // endpoints below land on the vertical sides without clamping.
    const double skew = skew_coordinate(p);
    const double g = std::fmax(std::fabs(p.x) * 0.25, std::fabs(skew));
    if (g > kMaxGauge) throw InvalidInput("decompose: gauge exceeds the supported stage range");

    const StageIndex stage = scale_index(g);
    const double half = stage.half_width();  // X = 2^(n+1), exact
    const double offset = 0.75 * half;       // exact

    return {stage, (half - p.x) / (2.0 * half), {-half, skew - offset}, {half, skew + offset}};
}

EndpointNormBound endpoint_norm_bound(const Point2& p) {
    const Decomposition d = decompose(p);
    return {gauge(d.e1), gauge(d.e2), std::fmax(2.0 * gauge(p), 1.0)};
}

}  // namespace comono
