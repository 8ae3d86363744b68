#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "comono/curve.hpp"
#include "comono/decomposition.hpp"
#include "comono/filtration.hpp"
#include "comono/gauge.hpp"
#include "comono/lift.hpp"
#include "comono/verification.hpp"

using namespace comono;

namespace {

std::vector<Point2> points(std::size_t n, double half_width) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-half_width, half_width);
    std::vector<Point2> out(n);
    for (auto& p : out) p = {d(rng), d(rng)};
    return out;
}

FiltrationModel model(std::size_t n) {
    std::vector<Atom> atoms;
    const auto pts = points(n, 1e4);
    double rest = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = i + 1 == n ? rest : 1.0 / static_cast<double>(n);
        rest -= w;
        atoms.push_back({"a" + std::to_string(i), w, pts[i]});
    }
    return FiltrationModel(std::move(atoms));
}

}  // namespace

static void BM_Gauge(benchmark::State& state) {
    const auto pts = points(4096, 1e6);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gauge(pts[i++ & 4095]));
}
BENCHMARK(BM_Gauge);

static void BM_GaugeOracle(benchmark::State& state) {
    const auto pts = points(4096, 1e6);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gauge_oracle(pts[i++ & 4095], 1e-10));
}
BENCHMARK(BM_GaugeOracle);

static void BM_Decompose(benchmark::State& state) {
    const auto pts = points(4096, 1e6);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decompose(pts[i++ & 4095]));
}
BENCHMARK(BM_Decompose);

static void BM_OnCurve(benchmark::State& state) {
    const auto pts = points(4096, 1e6);
    std::vector<Point2> ends;
    for (const auto& p : pts) ends.push_back(decompose(p).e2);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(on_curve(ends[i++ & 4095], 1e-9));
}
BENCHMARK(BM_OnCurve);

static void BM_Lift(benchmark::State& state) {
    const auto m = model(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lift(m));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lift)->Arg(100)->Arg(10000);

static void BM_SampleLift(benchmark::State& state) {
    const auto m = model(100);
    const auto law = lift(m);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_lift(m, law, n, 42));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleLift)->Arg(100000);

static void BM_ComonotoneCheckers(benchmark::State& state) {
    const auto support = lift(model(static_cast<std::size_t>(state.range(0)))).support();
    const bool pairwise = state.range(1) != 0;
    for (auto _ : state) {
        if (pairwise) {
            benchmark::DoNotOptimize(check_comonotone_pairwise(support, 0.0));
        } else {
            benchmark::DoNotOptimize(check_comonotone_witness(support, 0.0));
        }
    }
}
BENCHMARK(BM_ComonotoneCheckers)->Args({1000, 1})->Args({1000, 0})->Args({100000, 0});
BENCHMARK_MAIN();
