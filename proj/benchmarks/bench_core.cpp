#include <benchmark/benchmark.h>

#include <cl2/element.hpp>
#include <cl2/equivalence.hpp>
#include <cl2/matrix_rep.hpp>
#include <cl2/mp_inverse.hpp>
#include <cl2/rat_matrix.hpp>
#include <cl2/solvers.hpp>

#include <random>
#include <vector>

namespace {

using cl2::Element;

std::vector<Element> sample_elements(size_t count, uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Element> out;
    out.reserve(count);
    while (out.size() < count) {
        Element e = Element::from_rationals(
            cl2::make_rational(num(gen), den(gen)),
            cl2::make_rational(num(gen), den(gen)),
            cl2::make_rational(num(gen), den(gen)),
            cl2::make_rational(num(gen), den(gen)));
        if (!e.is_zero()) out.push_back(e);
    }
    return out;
}

void BM_ElementMul(benchmark::State& state) {
    auto xs = sample_elements(64, 1);
    size_t i = 0;
    for (auto _ : state) {
        Element p = xs[i % 64] * xs[(i + 1) % 64];
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_ElementMul);

void BM_MpClosedForm(benchmark::State& state) {
    auto xs = sample_elements(64, 2);
    size_t i = 0;
    for (auto _ : state) {
        Element p = cl2::mp(xs[i % 64]);
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_MpClosedForm);

void BM_MpMatrixOracle(benchmark::State& state) {
    auto xs = sample_elements(64, 3);
    size_t i = 0;
    for (auto _ : state) {
        cl2::RatMatrix m = cl2::mp_oracle(cl2::left_matrix(xs[i % 64]));
        benchmark::DoNotOptimize(m);
        ++i;
    }
}
BENCHMARK(BM_MpMatrixOracle);

void BM_SolveTwoSided(benchmark::State& state) {
    auto xs = sample_elements(96, 4);
    size_t i = 0;
    for (auto _ : state) {
        auto sol = cl2::solve_axb(xs[i % 96], xs[(i + 1) % 96],
                                  xs[(i + 2) % 96]);
        benchmark::DoNotOptimize(sol);
        ++i;
    }
}
BENCHMARK(BM_SolveTwoSided);

void BM_SolveCommuting(benchmark::State& state) {
    auto xs = sample_elements(64, 5);
    size_t i = 0;
    for (auto _ : state) {
        auto sol = cl2::solve_sylvester(xs[i % 64], xs[(i + 1) % 64]);
        benchmark::DoNotOptimize(sol);
        ++i;
    }
}
BENCHMARK(BM_SolveCommuting);

void BM_CanonicalForm(benchmark::State& state) {
    auto xs = sample_elements(64, 6);
    size_t i = 0;
    for (auto _ : state) {
        auto form = cl2::canonical(xs[i % 64]);
        benchmark::DoNotOptimize(form);
        ++i;
    }
}
BENCHMARK(BM_CanonicalForm);

void BM_WRankCase(benchmark::State& state) {
    auto xs = sample_elements(64, 7);
    size_t i = 0;
    for (auto _ : state) {
        auto rc = cl2::w_rank_case(xs[i % 64], xs[(i + 1) % 64]);
        benchmark::DoNotOptimize(rc);
        ++i;
    }
}
BENCHMARK(BM_WRankCase);

}  // namespace

BENCHMARK_MAIN();
