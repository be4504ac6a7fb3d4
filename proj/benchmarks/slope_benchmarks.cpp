// Microbenchmarks for the hot paths: exact pairings, signature computation,
// cycle iteration, single stability decisions, staircase counting, and the
// bounded search. Numbers here guard against regressions when the exact
// arithmetic kernels change; nothing asserts on them.

#include <benchmark/benchmark.h>

#include "slopestab/catalog.hpp"
#include "slopestab/certificate.hpp"
#include "slopestab/monomial.hpp"
#include "slopestab/search.hpp"

using namespace slopestab;

namespace {

DivClass cls(std::vector<long> v) {
    DivClass d;
    for (long x : v) d.emplace_back(x);
    return d;
}

const SurfaceModel& quartic() {
    static SurfaceModel m = catalog_get("blownup-quartic(17)").model;
    return m;
}

SurfaceModel star_model() {
    SurfaceModel m;
    m.name = "star";
    m.basis = {"h", "c0", "c1", "c2", "c3"};
    m.gram = QMatrix(5, 5);
    m.gram.at(0, 0) = 1;
    for (int i = 1; i <= 4; ++i) m.gram.at(i, i) = -2;
    for (int i = 2; i <= 4; ++i) {
        m.gram.at(1, i) = 1;
        m.gram.at(i, 1) = 1;
    }
    m.canonical = DivClass(5, Rat(0));
    for (int i = 0; i <= 3; ++i) {
        DivClass c(5, Rat(0));
        c[i + 1] = 1;
        m.curves.push_back({"c" + std::to_string(i), c, Rat(0)});
    }
    m.kodaira_nonneg = true;
    m.reference_positive = cls({1, 0, 0, 0, 0});
    return m;
}

}  // namespace

static void BM_pair_rank18(benchmark::State& state) {
    const SurfaceModel& m = quartic();
    const DivClass& l = m.polarisations[0].cls;
    const DivClass& c = m.curves[0].cls;
    for (auto _ : state) benchmark::DoNotOptimize(pair(m, l, c));
}
BENCHMARK(BM_pair_rank18);

static void BM_inertia_rank18(benchmark::State& state) {
    const SurfaceModel& m = quartic();
    for (auto _ : state) {
        Inertia in = inertia(m.gram);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(BM_inertia_rank18);

static void BM_numerical_cycle_star(benchmark::State& state) {
    SurfaceModel m = star_model();
    DivisorConfig cfg =
        make_config(m, {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"c3", 1}});
    for (auto _ : state) {
        CycleResult r = numerical_cycle(m, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_numerical_cycle_star);

static void BM_destabilizes_exceptional(benchmark::State& state) {
    SurfaceModel m = catalog_get("dp1").model;
    DivClass l = cls({3, -1}), e = cls({0, 1});
    for (auto _ : state) {
        StabilityVerdict v = destabilizes(m, l, e, Mode::Strict);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_destabilizes_exceptional);

static void BM_certificate_build(benchmark::State& state) {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    DivClass base = cls({1, 0});
    for (auto _ : state) {
        Certificate c = build_certificate(m, cfg, base);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_certificate_build);

static void BM_colength(benchmark::State& state) {
    MonomialIdeal ideal = make_ideal({{2, 0}, {0, 3}});
    const int j = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(colength(ideal, j));
}
BENCHMARK(BM_colength)->Arg(10)->Arg(40);

static void BM_search_bounded(benchmark::State& state) {
    SurfaceModel m = catalog_get("dp2").model;
    DivClass l = cls({3, -1, -1});
    SearchOptions opt;
    opt.bound = state.range(0);
    for (auto _ : state) {
        SearchReport rep = search_destabilizers(m, l, opt);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_search_bounded)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
