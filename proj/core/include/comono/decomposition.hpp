#pragma once

#include "comono/gauge.hpp"
#include "comono/point.hpp"

namespace comono {

/// p = lambda * e1 + (1 - lambda) * e2 with e1, e2 on the left and right vertical
/// sides of P_stage. Both endpoints lie on the curve E.
struct Decomposition {
    StageIndex stage{1};
    double lambda = 0.5;
    Point2 e1;
    Point2 e2;

    Point2 reconstruct() const { return lambda * e1 + (1.0 - lambda) * e2; }
};

/// Slides p along the direction of P_1's slanted sides (slope 3/4) until it hits the
/// vertical sides x = -/+ 2^(n+1) of P_n, n = scale_index(gauge(p)).
/// Throws InvalidInput for non-finite p or gauge(p) > kMaxGauge.
Decomposition decompose(const Point2& p);

struct EndpointNormBound {
    double left_gauge;
    double right_gauge;
    double bound;  ///< max(2 gauge(p), 1)
};

EndpointNormBound endpoint_norm_bound(const Point2& p);

}  // namespace comono
