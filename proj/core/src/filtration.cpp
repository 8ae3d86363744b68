#include "comono/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "comono/errors.hpp"
#include "comono/rng.hpp"

namespace comono {

FiltrationModel::FiltrationModel(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InvalidInput("filtration model needs at least one atom");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!index_.emplace(a.id, i).second) throw InvalidInput("duplicate atom id '" + a.id + "'");
        if (!(a.weight > 0.0 && a.weight <= 1.0)) throw InvalidInput("atom '" + a.id + "': weight must lie in (0,1]");
        if (!a.payoff.finite()) throw InvalidInput("atom '" + a.id + "': payoff is not finite");
        total += a.weight;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw InvalidInput("atom weights do not sum to 1");
}

std::size_t FiltrationModel::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InvalidEvent("unknown atom id '" + id + "'");
    return it->second;
}

const IntervalSet& EventF2::on(const std::string& id) const {
    static const IntervalSet empty;
    auto it = per_atom.find(id);
    return it == per_atom.end() ? empty : it->second;
}

namespace {

void check_atoms(const FiltrationModel& model, const EventF2& a) {
    for (const auto& [id, set] : a.per_atom) {
        if (!model.contains(id)) throw InvalidEvent("event references unknown atom id '" + id + "'");
    }
}

}  // namespace

CondExpectation cond_exp_indicator(const FiltrationModel& model, const EventF2& a) {
    check_atoms(model, a);
    CondExpectation out;
    for (const auto& atom : model.atoms()) out[atom.id] = a.on(atom.id).measure();
    return out;
}

EventF2 b_t_event(const FiltrationModel& model, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("b_t_event: t must lie in [0,1]");
    EventF2 out;
    for (const auto& atom : model.atoms()) out.per_atom[atom.id] = IntervalSet{{0.0, t}};
    return out;
}

EventF2 u_le_h_event(const FiltrationModel& model, const CondExpectation& h) {
    EventF2 out;
    for (const auto& atom : model.atoms()) {
        auto it = h.find(atom.id);
        if (it == h.end()) throw InvalidInput("u_le_h_event: h undefined on atom '" + atom.id + "'");
        const double level = it->second;
        if (!(level >= 0.0 && level <= 1.0)) throw InvalidInput("u_le_h_event: h must take values in [0,1]");
        out.per_atom[atom.id] = IntervalSet{{0.0, level}};
    }
    for (const auto& [id, level] : h) {
        if (!model.contains(id)) throw InvalidInput("u_le_h_event: h defined on unknown atom '" + id + "'");
    }
    return out;
}

EventF2 atomless_split(const FiltrationModel& model, const EventF2& a) {
    check_atoms(model, a);
    EventF2 out;
    for (const auto& [id, set] : a.per_atom) {
        if (set.empty()) continue;
        std::vector<Interval> halves;
        halves.reserve(set.pieces().size());
        for (const auto& iv : set.pieces()) halves.push_back({iv.lo, iv.lo + 0.5 * iv.length()});
        IntervalSet b(std::move(halves));
        const double mass = set.measure();
        const double sub = b.measure();
        if (!(sub > 0.0 && sub < mass)) {
            // Pieces one ulp wide do not halve; with several pieces, keep just the first.
            if (set.pieces().size() < 2) {
                throw InvalidEvent("atom '" + id + "': interval too narrow to split");
            }
            b = IntervalSet{set.pieces().front()};
        }
        out.per_atom[id] = std::move(b);
    }
    return out;
}

std::vector<UDraw> sample_u(const FiltrationModel& model, std::size_t n, std::uint64_t seed, std::uint64_t first) {
    if (n == 0) throw InvalidInput("sample_u: n must be >= 1");
    std::vector<double> cumulative;
    cumulative.reserve(model.size());
    double acc = 0.0;
    for (const auto& atom : model.atoms()) cumulative.push_back(acc += atom.weight);

    const CounterRng rng(seed);
    std::vector<UDraw> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto words = rng.bits(first + i);
        // Scale by the actual total so rounding in the weights cannot leave a gap at the top.
        const double pick = CounterRng::to_unit(words[0]) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
        const std::size_t atom = std::min<std::size_t>(it - cumulative.begin(), model.size() - 1);
        out.push_back({atom, CounterRng::to_unit(words[1])});
    }
    return out;
}

}  // namespace comono
