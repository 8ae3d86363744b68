#include "comono/lift.hpp"

#include <cmath>

#include "comono/decomposition.hpp"
#include "comono/errors.hpp"
#include "comono/gauge.hpp"

namespace comono {

Point2 AtomLaw::mean() const {
    Point2 m{0.0, 0.0};
    for (const auto& b : branches) m = m + b.prob * b.point;
    return m;
}

std::vector<Point2> LiftedLaw::support() const {
    std::vector<Point2> out;
    for (const auto& a : atoms) {
        for (const auto& b : a.branches) out.push_back(b.point);
    }
    return out;
}

LiftedLaw lift(const FiltrationModel& model) {
    LiftedLaw law;
    law.atoms.reserve(model.size());
    for (const auto& atom : model.atoms()) {
        Decomposition d;
        try {
            d = decompose(atom.payoff);
        } catch (const InvalidInput& e) {
            throw InvalidInput("atom '" + atom.id + "': " + e.what());
        }
        AtomLaw entry{atom.id, {}};
        if (d.lambda == 1.0) {
            entry.branches = {{1.0, d.e1}};
        } else if (d.lambda == 0.0) {
            entry.branches = {{1.0, d.e2}};
        } else {
            entry.branches = {{d.lambda, d.e1}, {1.0 - d.lambda, d.e2}};
        }
        law.atoms.push_back(std::move(entry));
    }
    return law;
}

void check_law_matches(const FiltrationModel& model, const LiftedLaw& law) {
    if (law.atoms.size() != model.size()) throw InvalidInput("law and model have different atom counts");
    for (std::size_t i = 0; i < model.size(); ++i) {
        const auto& entry = law.atoms[i];
        if (entry.atom_id != model[i].id) {
            throw InvalidInput("law atom '" + entry.atom_id + "' does not match model atom '" + model[i].id + "'");
        }
        if (entry.branches.empty() || entry.branches.size() > 2) {
            throw InvalidInput("atom '" + entry.atom_id + "': law must have one or two branches");
        }
    }
}

std::vector<SamplePair> sample_lift(const FiltrationModel& model, const LiftedLaw& law, std::size_t n,
                                    std::uint64_t seed) {
    check_law_matches(model, law);
    const auto draws = sample_u(model, n, seed);
    std::vector<SamplePair> out;
    out.reserve(draws.size());
    for (const auto& draw : draws) {
        const auto& branches = law.atoms[draw.atom].branches;
        const bool first = branches.size() == 1 || draw.u <= branches.front().prob;
        const Point2& p = first ? branches.front().point : branches.back().point;
        out.push_back({draw.atom, draw.u, p.x, p.y});
    }
    return out;
}

std::vector<NormMargin> lifted_norm_bound(const FiltrationModel& model, const LiftedLaw& law) {
    check_law_matches(model, law);
    std::vector<NormMargin> out;
    out.reserve(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        double worst = 0.0;
        for (const auto& b : law.atoms[i].branches) worst = std::fmax(worst, gauge(b.point));
        const double bound = std::fmax(2.0 * gauge(model[i].payoff), 1.0);
        out.push_back({model[i].id, worst, bound, bound - worst});
    }
    return out;
}

}  // namespace comono
