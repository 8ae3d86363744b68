#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comono/filtration.hpp"
#include "comono/lift.hpp"
#include "comono/point.hpp"

namespace comono {

struct PairwiseResult {
    double min_product;
    bool pass;
};

/// min over unordered pairs of (x - x')(y - y'); passes iff that is >= -tol. O(m^2).
/// Throws InvalidInput for fewer than two points or tol < 0.
PairwiseResult check_comonotone_pairwise(std::span<const Point2> points, double tol);

/// Largest decrease of either coordinate between neighbours once the points are
/// sorted by zeta = x + y (ties by x, then y). Zero for comonotone sets.
double comonotone_witness_violation(std::span<const Point2> points);

/// Comonotonicity through the witness zeta = x + y: passes iff both coordinates are
/// nondecreasing within tol along the zeta order. O(m log m).
bool check_comonotone_witness(std::span<const Point2> points, double tol);

/// One row of a verification report. Every check passes iff statistic <= threshold.
struct Check {
    std::string name;
    double statistic;
    double threshold;
    bool pass;
};

struct VerificationReport {
    double max_reconstruction_error = 0.0;  ///< max |law mean - payoff|_inf / max(1, gauge(payoff))
    double min_comonotone_product = 0.0;    ///< pooled support; +inf when not computed
    double min_norm_bound_margin = 0.0;     ///< min over atoms of bound - max branch gauge
    double cond_exp_max_residual = 0.0;     ///< max |law mean - payoff|_inf, absolute
    std::vector<Check> checks;
    std::vector<Check> mc_checks;
    bool overall_pass = false;

    /// Conjunction of every check, recomputed from the rows.
    bool recompute_pass() const;
};

/// Supports larger than this skip the quadratic pairwise checker.
inline constexpr std::size_t kPairwiseLimit = 10'000;

/// Statistical checks reject beyond this many standard errors.
inline constexpr double kZThreshold = 5.0;

/// Relative slack allowed in the pointwise norm bound.
inline constexpr double kNormBoundSlack = 1e-12;

/// Runs every check of the lifted law against the model: reconstruction of the payoffs,
/// branch structure, curve membership, skew alignment of the endpoints, the norm bound,
/// pooled-support comonotonicity (both checkers), the tower property and, when
/// mc_samples > 0, sampler mean and branch-frequency z-checks.
/// Throws InvalidInput if law does not match the model or tol <= 0.
VerificationReport verify_model(const FiltrationModel& model, const LiftedLaw& law, std::size_t mc_samples,
                                std::uint64_t seed, double tol);

}  // namespace comono
