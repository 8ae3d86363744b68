#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "comono/interval_set.hpp"
#include "comono/point.hpp"

namespace comono {

/// An atom of F1: probability weight and the value (f, g) the F1-measurable payoff takes on it.
struct Atom {
    std::string id;
    double weight;
    Point2 payoff;
};

/// Omega = (finite F1 partition) x [0,1] with P = weight x Lebesgue. F2 is generated by F1
/// and the second coordinate U, which is uniform and independent of F1 by construction,
/// so F2 is atomless conditionally to F1.
class FiltrationModel {
  public:
    /// Throws InvalidInput if empty, ids repeat, a weight is not in (0,1], a payoff is
    /// not finite, or the weights do not sum to 1 within 1e-12.
    explicit FiltrationModel(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    const Atom& operator[](std::size_t i) const { return atoms_[i]; }

    /// Throws InvalidEvent for unknown ids.
    std::size_t index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return index_.contains(id); }

  private:
    std::vector<Atom> atoms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// F2-event: per atom, the set of U-values it contains. Atoms absent from the map
/// contribute the empty set.
struct EventF2 {
    std::map<std::string, IntervalSet> per_atom;

    const IntervalSet& on(const std::string& id) const;
    bool operator==(const EventF2&) const = default;
};

/// E[. | F1] as one value per atom, keyed by atom id.
using CondExpectation = std::map<std::string, double>;

/// E[1_A | F1]: the Lebesgue measure of A's section on each atom.
CondExpectation cond_exp_indicator(const FiltrationModel& model, const EventF2& a);

/// B_t = {U <= t}. Throws InvalidInput unless 0 <= t <= 1.
EventF2 b_t_event(const FiltrationModel& model, double t);

/// {U <= h} for an F1-measurable h with values in [0,1].
EventF2 u_le_h_event(const FiltrationModel& model, const CondExpectation& h);

/// A sub-event B of A with 0 < E[1_B|F1] < E[1_A|F1] wherever E[1_A|F1] > 0: the left
/// half of each of A's intervals. Throws InvalidEvent if A names unknown atoms or an
/// atom's section is a single interval too narrow to split in double precision.
EventF2 atomless_split(const FiltrationModel& model, const EventF2& a);

struct UDraw {
    std::size_t atom;  ///< index into model.atoms()
    double u;          ///< in [0,1)
};

/// n draws of (atom, U): atom with probability weight, U uniform and independent of it.
/// Draw i depends only on (seed, first + i), so disjoint ranges can be drawn separately.
std::vector<UDraw> sample_u(const FiltrationModel& model, std::size_t n, std::uint64_t seed,
                            std::uint64_t first = 0);

}  // namespace comono
