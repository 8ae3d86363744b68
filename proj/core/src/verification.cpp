#include "comono/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "comono/curve.hpp"
#include "comono/errors.hpp"
#include "comono/gauge.hpp"

namespace comono {

PairwiseResult check_comonotone_pairwise(std::span<const Point2> points, double tol) {
    if (points.size() < 2) throw InvalidInput("comonotonicity check needs at least two points");
    if (!(tol >= 0.0)) throw InvalidInput("comonotonicity check: tol must be >= 0");
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            lowest = std::fmin(lowest, (points[i].x - points[j].x) * (points[i].y - points[j].y));
        }
    }
    return {lowest, lowest >= -tol};
}

double comonotone_witness_violation(std::span<const Point2> points) {
    std::vector<Point2> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Point2& a, const Point2& b) {
        const double za = a.x + a.y;
        const double zb = b.x + b.y;
        if (za != zb) return za < zb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    double worst = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        worst = std::fmax(worst, sorted[i - 1].x - sorted[i].x);
        worst = std::fmax(worst, sorted[i - 1].y - sorted[i].y);
    }
    return worst;
}

bool check_comonotone_witness(std::span<const Point2> points, double tol) {
    if (points.size() < 2) throw InvalidInput("comonotonicity check needs at least two points");
    if (!(tol >= 0.0)) throw InvalidInput("comonotonicity check: tol must be >= 0");
    return comonotone_witness_violation(points) <= tol;
}

bool VerificationReport::recompute_pass() const {
    auto ok = [](const Check& c) { return c.pass; };
    return std::all_of(checks.begin(), checks.end(), ok) && std::all_of(mc_checks.begin(), mc_checks.end(), ok);
}

namespace {

Check make_check(std::string name, double statistic, double threshold) {
    // NaN statistics fail.
    return {std::move(name), statistic, threshold, statistic <= threshold};
}

double scale_of(const Point2& p) { return std::fmax(1.0, gauge(p)); }

bool near_curve(const Point2& p, double tol) {
    if (!p.finite() || gauge(p) > kMaxGauge) return false;
    return on_curve(p, tol * scale_of(p));
}

void add_mc_checks(const FiltrationModel& model, const LiftedLaw& law, std::size_t n, std::uint64_t seed,
                   VerificationReport& report) {
    struct Tally {
        std::size_t count = 0;
        std::size_t first_branch = 0;
        double sum_xi = 0.0;
        double sum_eta = 0.0;
    };
    std::vector<Tally> tally(model.size());
    for (const auto& s : sample_lift(model, law, n, seed)) {
        auto& t = tally[s.atom];
        ++t.count;
        t.sum_xi += s.xi;
        t.sum_eta += s.eta;
        const auto& first = law.atoms[s.atom].branches.front().point;
        if (s.xi == first.x && s.eta == first.y) ++t.first_branch;
    }

    for (std::size_t i = 0; i < model.size(); ++i) {
        const auto& t = tally[i];
        if (t.count == 0) continue;
        const auto& branches = law.atoms[i].branches;
        const Point2 payoff = model[i].payoff;
        const double count = static_cast<double>(t.count);
        const Point2 mean{t.sum_xi / count, t.sum_eta / count};
        const std::string& id = model[i].id;

        if (branches.size() == 1) {
            // Degenerate law: every draw is the branch point, so only rounding in the mean remains.
            report.mc_checks.push_back(make_check("mc_mean:" + id, max_distance(mean, payoff) / scale_of(payoff),
                                                  1e-12 + std::numeric_limits<double>::epsilon() * count));
            continue;
        }
        const double lambda = branches[0].prob;
        const double spread = std::sqrt(lambda * (1.0 - lambda));
        const Point2 gap = branches[0].point - branches[1].point;
        auto z = [&](double diff, double sd) {
            const double se = sd / std::sqrt(count);
            if (se == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            return std::fabs(diff) / se;
        };
        report.mc_checks.push_back(make_check("mc_mean_xi:" + id, z(mean.x - payoff.x, spread * std::fabs(gap.x)),
                                              kZThreshold));
        report.mc_checks.push_back(make_check("mc_mean_eta:" + id, z(mean.y - payoff.y, spread * std::fabs(gap.y)),
                                              kZThreshold));
        report.mc_checks.push_back(
            make_check("mc_branch_freq:" + id, z(static_cast<double>(t.first_branch) / count - lambda, spread),
                       kZThreshold));
    }
}

}  // namespace

VerificationReport verify_model(const FiltrationModel& model, const LiftedLaw& law, std::size_t mc_samples,
                                std::uint64_t seed, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("verify: tol must be positive");
    check_law_matches(model, law);

    VerificationReport report;
    double rel_residual = 0.0;
    double abs_residual = 0.0;
    std::size_t malformed = 0;
    std::size_t off_curve = 0;
    double skew_error = 0.0;
    Point2 weighted_payoff{0, 0};
    Point2 weighted_mean{0, 0};
    double weighted_scale = 0.0;

    for (std::size_t i = 0; i < model.size(); ++i) {
        const Atom& atom = model[i];
        const AtomLaw& entry = law.atoms[i];
        const double scale = scale_of(atom.payoff);

        double total = 0.0;
        bool structure_ok = true;
        for (const auto& b : entry.branches) {
            if (!(b.prob > 0.0 && b.prob <= 1.0)) structure_ok = false;
            total += b.prob;
            if (!near_curve(b.point, tol)) ++off_curve;
        }
        if (std::fabs(total - 1.0) > tol) structure_ok = false;
        if (!structure_ok) ++malformed;

        const Point2 mean = entry.mean();
        const double residual = max_distance(mean, atom.payoff);
        abs_residual = std::fmax(abs_residual, residual);
        rel_residual = std::fmax(rel_residual, residual / scale);

        // Both endpoints must sit on the line through the payoff parallel to P_1's slanted sides.
        if (entry.branches.size() == 2) {
            const double skew = skew_coordinate(atom.payoff);
            for (const auto& b : entry.branches) {
                skew_error = std::fmax(skew_error, std::fabs(skew_coordinate(b.point) - skew) / scale);
            }
        }

        weighted_payoff = weighted_payoff + atom.weight * atom.payoff;
        weighted_mean = weighted_mean + atom.weight * mean;
        weighted_scale += atom.weight * scale;
    }

    report.max_reconstruction_error = rel_residual;
    report.cond_exp_max_residual = abs_residual;
    report.checks.push_back(make_check("reconstruction", rel_residual, tol));
    report.checks.push_back(make_check("branch_structure", static_cast<double>(malformed), 0.0));
    report.checks.push_back(make_check("curve_membership", static_cast<double>(off_curve), 0.0));
    report.checks.push_back(make_check("skew_alignment", skew_error, tol));

    double min_margin = std::numeric_limits<double>::infinity();
    double worst_excess = -std::numeric_limits<double>::infinity();
    for (const auto& m : lifted_norm_bound(model, law)) {
        min_margin = std::fmin(min_margin, m.margin);
        worst_excess = std::fmax(worst_excess, (m.max_branch_gauge - m.bound) / m.bound);
    }
    report.min_norm_bound_margin = min_margin;
    report.checks.push_back(make_check("norm_bound", worst_excess, kNormBoundSlack));

    const auto support = law.support();
    report.min_comonotone_product = std::numeric_limits<double>::infinity();
    if (support.size() >= 2) {
        if (support.size() <= kPairwiseLimit) {
            const auto pairwise = check_comonotone_pairwise(support, tol);
            report.min_comonotone_product = pairwise.min_product;
            report.checks.push_back(make_check("comonotone_pairwise", std::fmax(0.0, -pairwise.min_product), tol));
        }
        report.checks.push_back(make_check("comonotone_witness", comonotone_witness_violation(support), tol));
    }

    report.checks.push_back(make_check(
        "tower_property", max_distance(weighted_payoff, weighted_mean) / std::fmax(1.0, weighted_scale), tol));

    if (mc_samples > 0) add_mc_checks(model, law, mc_samples, seed, report);

    report.overall_pass = report.recompute_pass();
    return report;
}

}  // namespace comono
