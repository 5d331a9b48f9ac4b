#include <benchmark/benchmark.h>

#include <random>

#include "skewpencil/decompose.hpp"
#include "skewpencil/generate.hpp"
#include "skewpencil/invariants.hpp"
#include "skewpencil/poly.hpp"

using namespace skewpencil;

namespace {

InstanceSpec mixed_spec(FieldDescriptor f, std::size_t reps) {
    InstanceSpec spec{f, {}, 17, false, 2};
    for (std::size_t i = 0; i < reps; ++i) {
        spec.blocks.push_back(Block::kronecker(f, 1));
        spec.blocks.push_back(Block::jordan_inf(f, 2));
        spec.blocks.push_back(Block::jordan(Scalar::from_int(f, 1 + long(i)), 1));
    }
    return spec;
}

void BM_DecomposeQ(benchmark::State& state) {
    GeneratedInstance gi = generate(mixed_spec(FieldDescriptor::rationals(), state.range(0)));
    for (auto _ : state) {
        DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
        benchmark::DoNotOptimize(res.decomposition.blocks.size());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(gi.pencil.n));
}

void BM_DecomposeFp(benchmark::State& state) {
    GeneratedInstance gi =
        generate(mixed_spec(FieldDescriptor::prime_field(10007), state.range(0)));
    for (auto _ : state) {
        DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
        benchmark::DoNotOptimize(res.decomposition.blocks.size());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(gi.pencil.n));
}

void BM_Rref(benchmark::State& state) {
    GeneratedInstance gi = generate(mixed_spec(FieldDescriptor::rationals(), state.range(0)));
    for (auto _ : state) {
        auto r = rref(gi.pencil.A);
        benchmark::DoNotOptimize(r.rank);
    }
}

void BM_CharPoly(benchmark::State& state) {
    FieldDescriptor f = FieldDescriptor::rationals();
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(5);
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::from_int(f, long(rng() % 7) - 3);
    for (auto _ : state) {
        Poly c = char_poly(m);
        benchmark::DoNotOptimize(c.degree());
    }
}

}  // namespace

BENCHMARK(BM_DecomposeQ)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeFp)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
