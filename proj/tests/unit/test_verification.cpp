#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "comono/errors.hpp"
#include "comono/gauge.hpp"
#include "comono/lift.hpp"
#include "comono/verification.hpp"
#include "support.hpp"

using namespace comono;

namespace {

FiltrationModel demo() { return FiltrationModel({{"a", 0.5, {0, 0}}, {"b", 0.5, {8, 8}}}); }

const Check& find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return c;
    }
    FAIL("no check named " << name);
    return r.checks.front();
}

/// Points that are comonotone by construction: a nondecreasing walk, shuffled.
std::vector<Point2> comonotone_set(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> step(0.0, 1.0);
    std::bernoulli_distribution flat(0.2);
    std::vector<Point2> pts;
    Point2 p{step(rng) * 10 - 5, step(rng) * 10 - 5};
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(p);
        p.x += flat(rng) ? 0.0 : step(rng);
        p.y += flat(rng) ? 0.0 : step(rng);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    return pts;
}

}  // namespace

TEST_CASE("pairwise checker examples") {
    const std::vector<Point2> up{{0, 0}, {1, 2}, {3, 3}};
    const auto r = check_comonotone_pairwise(up, 0.0);
    CHECK(r.min_product >= 0.0);
    CHECK(r.pass);

    const std::vector<Point2> anti{{0, 1}, {1, 0}};
    const auto a = check_comonotone_pairwise(anti, 0.0);
    CHECK(a.min_product == -1.0);
    CHECK_FALSE(a.pass);

    const std::vector<Point2> vertical{{1, 1}, {1, 5}};
    const auto v = check_comonotone_pairwise(vertical, 0.0);
    CHECK(v.min_product == 0.0);
    CHECK(v.pass);

    const std::vector<Point2> one{{1, 1}};
    CHECK_THROWS_AS(check_comonotone_pairwise(one, 0.0), InvalidInput);
    CHECK_THROWS_AS(check_comonotone_pairwise(up, -1.0), InvalidInput);
}

TEST_CASE("witness checker examples") {
    const std::vector<Point2> anti{{0, 1}, {1, 0}};
    CHECK_FALSE(check_comonotone_witness(anti, 0.0));
    const std::vector<Point2> repeated(5, Point2{2, 3});
    CHECK(check_comonotone_witness(repeated, 0.0));
    CHECK(check_comonotone_witness(lift(demo()).support(), 1e-12));
    const std::vector<Point2> one{{1, 1}};
    CHECK_THROWS_AS(check_comonotone_witness(one, 0.0), InvalidInput);
}

TEST_CASE("witness accepts the support of any lift") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
        const auto support = lift(testing::random_model(rng, 300)).support();
        CHECK(check_comonotone_witness(support, 0.0));
        CHECK(check_comonotone_pairwise(support, 0.0).pass);
    }
}

TEST_CASE("the two checkers agree") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::size_t> size(2, 60);
    std::uniform_real_distribution<double> kick(-2.0, 2.0);
    int agree_pass = 0, agree_fail = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto pts = comonotone_set(rng, size(rng));
        if (trial % 2) {
            // Move one coordinate of one point by a non-trivial amount.
            auto& p = pts[rng() % pts.size()];
            (rng() % 2 ? p.x : p.y) += kick(rng);
        }
        const bool pairwise = check_comonotone_pairwise(pts, 0.0).pass;
        const bool witness = check_comonotone_witness(pts, 0.0);
        REQUIRE(pairwise == witness);
        (pairwise ? agree_pass : agree_fail)++;
    }
    // Both verdicts were exercised.
    CHECK(agree_pass > 100);
    CHECK(agree_fail > 100);
}

TEST_CASE("verify the demo model") {
    const auto m = demo();
    const auto law = lift(m);
    const auto r = verify_model(m, law, 0, 1, 1e-9);
    CHECK(r.overall_pass);
    CHECK(r.mc_checks.empty());
    CHECK(r.max_reconstruction_error == 0.0);
    CHECK(r.cond_exp_max_residual == 0.0);
    CHECK(r.min_norm_bound_margin == 0.0);
    CHECK(r.min_comonotone_product >= 0.0);
    CHECK(r.overall_pass == r.recompute_pass());

    const auto with_mc = verify_model(m, law, 100000, 3, 1e-9);
    CHECK(with_mc.overall_pass);
    CHECK_FALSE(with_mc.mc_checks.empty());

    CHECK_THROWS_AS(verify_model(m, law, 0, 1, 0.0), InvalidInput);
    auto short_law = law;
    short_law.atoms.pop_back();
    CHECK_THROWS_AS(verify_model(m, short_law, 0, 1, 1e-9), InvalidInput);
}

TEST_CASE("a perturbed branch is caught") {
    const auto m = demo();
    auto law = lift(m);
    const double lambda = law.atoms[0].branches[0].prob;
    law.atoms[0].branches[0].point.y += 0.1;
    const auto r = verify_model(m, law, 0, 1, 1e-9);
    CHECK_FALSE(r.overall_pass);
    CHECK(r.cond_exp_max_residual == doctest::Approx(lambda * 0.1).epsilon(1e-12));
    CHECK_FALSE(find_check(r, "reconstruction").pass);
    CHECK_FALSE(find_check(r, "skew_alignment").pass);
    CHECK(r.overall_pass == r.recompute_pass());
}

TEST_CASE("zero-probability branches fail the structure check") {
    const auto m = demo();
    auto law = lift(m);
    law.atoms[1].branches = {{1.0, {8, 8}}, {0.0, {8, 8}}};
    const auto r = verify_model(m, law, 0, 1, 1e-9);
    CHECK_FALSE(find_check(r, "branch_structure").pass);
    CHECK_FALSE(r.overall_pass);
}

TEST_CASE("fault sensitivity: every single-coordinate perturbation flips a check") {
    std::mt19937_64 rng(71);
    const double tol = 1e-9;
    for (auto [lo, hi] : {std::pair{1e-3, 1.0}, std::pair{1e-3, 1e4}}) {
        const auto model = testing::random_model(rng, 40, lo, hi);
        const auto law = lift(model);
        REQUIRE(verify_model(model, law, 0, 1, tol).overall_pass);
        for (std::size_t i = 0; i < law.atoms.size(); ++i) {
            const double scale = std::fmax(1.0, gauge(model[i].payoff));
            for (std::size_t b = 0; b < law.atoms[i].branches.size(); ++b) {
                for (int coord = 0; coord < 2; ++coord) {
                    for (double sign : {1.0, -1.0}) {
                        auto bad = law;
                        auto& pt = bad.atoms[i].branches[b].point;
                        (coord == 0 ? pt.x : pt.y) += sign * 10.0 * tol * scale;
                        const auto r = verify_model(model, bad, 0, 1, tol);
                        CAPTURE(i);
                        CAPTURE(b);
                        CAPTURE(coord);
                        CHECK_FALSE(r.overall_pass);
                        CHECK(r.overall_pass == r.recompute_pass());
                    }
                }
            }
        }
    }
}

TEST_CASE("Monte Carlo checks flag a biased law") {
    // Swapping lambda for 1 - lambda keeps the support but moves the mean.
    const FiltrationModel m({{"p", 1.0, {1, 0.5}}});
    auto law = lift(m);
    REQUIRE(law.atoms[0].branches.size() == 2);
    auto& br = law.atoms[0].branches;
    std::swap(br[0].prob, br[1].prob);
    const auto r = verify_model(m, law, 200000, 4, 1e-9);
    CHECK_FALSE(r.overall_pass);
    bool any_mc_fail = false;
    for (const auto& c : r.mc_checks) any_mc_fail |= !c.pass;
    CHECK(any_mc_fail);
}
