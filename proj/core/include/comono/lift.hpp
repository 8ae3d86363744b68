#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "comono/filtration.hpp"
#include "comono/point.hpp"

namespace comono {

struct Branch {
    double prob;
    Point2 point;

    bool operator==(const Branch&) const = default;
};

/// Conditional law of (xi, eta) on one atom: lambda * delta_e1 + (1 - lambda) * delta_e2,
/// stored as one branch when lambda is exactly 0 or 1.
struct AtomLaw {
    std::string atom_id;
    std::vector<Branch> branches;

    /// Probability of the first branch. 1 for single-branch laws.
    double lambda() const { return branches.front().prob; }
    Point2 mean() const;

    bool operator==(const AtomLaw&) const = default;
};

/// Exact distribution of (xi, eta) given F1, one entry per model atom, in model order.
struct LiftedLaw {
    std::vector<AtomLaw> atoms;

    /// Every branch point across all atoms (the pooled support).
    std::vector<Point2> support() const;

    bool operator==(const LiftedLaw&) const = default;
};

/// Builds the comonotone pair for (f, g) = the model payoffs: each payoff is
/// decomposed onto the curve and randomized by the F1-independent uniform U.
/// Errors from decompose are rethrown as InvalidInput naming the atom.
LiftedLaw lift(const FiltrationModel& model);

/// Throws InvalidInput unless law has the model's atom ids in model order and
/// each atom has one or two branches.
void check_law_matches(const FiltrationModel& model, const LiftedLaw& law);

struct SamplePair {
    std::size_t atom;
    double u;
    double xi;
    double eta;
};

/// xi, eta = 1{U <= lambda} e1 + 1{U > lambda} e2 with (atom, U) from sample_u.
std::vector<SamplePair> sample_lift(const FiltrationModel& model, const LiftedLaw& law, std::size_t n,
                                    std::uint64_t seed);

struct NormMargin {
    std::string atom_id;
    double max_branch_gauge;
    double bound;   ///< max(2 gauge(payoff), 1)
    double margin;  ///< bound - max_branch_gauge
};

/// Per-atom slack in the pointwise bound gauge(xi, eta) <= max(2 gauge(f, g), 1).
std::vector<NormMargin> lifted_norm_bound(const FiltrationModel& model, const LiftedLaw& law);

}  // namespace comono
