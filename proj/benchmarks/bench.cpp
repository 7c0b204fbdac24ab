#include <benchmark/benchmark.h>

#include <random>

#include "gammadec/artinian.hpp"
#include "gammadec/decomposition.hpp"
#include "gammadec/generators.hpp"
#include "gammadec/homology.hpp"

using namespace gammadec;

static void BM_FaceEnumeration(benchmark::State& state) {
    const SimplicialComplex k = cross_polytope_boundary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const SimplicialComplex copy = k;  // reset the lazy cache
        benchmark::DoNotOptimize(copy.face_count());
    }
}
BENCHMARK(BM_FaceEnumeration)->Arg(6)->Arg(8)->Arg(10);

static void BM_SparseIntRank(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int n = static_cast<int>(state.range(0));
    std::uniform_int_distribution<int> val(-9, 9);
    std::bernoulli_distribution fill(0.1);
    std::vector<SparseIntRow> rows(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (fill(rng)) rows[r].emplace_back(c, val(rng));
    for (auto _ : state) {
        auto copy = rows;
        benchmark::DoNotOptimize(sparse_int_rank(std::move(copy), n));
    }
}
BENCHMARK(BM_SparseIntRank)->Arg(100)->Arg(300);

static void BM_BarycentricSubdivision(benchmark::State& state) {
    const SimplicialComplex base = simplex_boundary(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivision(base));
}
BENCHMARK(BM_BarycentricSubdivision)->Arg(4)->Arg(5);

static void BM_ArtinianDims(benchmark::State& state) {
    const SimplicialComplex base = simplex_boundary(static_cast<int>(state.range(0)));
    const SimplicialComplex sd = barycentric_subdivision(base);
    const auto forms = coloring_lsop(sd, barycentric_coloring(base));
    for (auto _ : state) benchmark::DoNotOptimize(artinian_dims(sd, forms));
}
BENCHMARK(BM_ArtinianDims)->Arg(4)->Arg(5);

static void BM_PartitionOfUnity(benchmark::State& state) {
    const SimplicialComplex k = SimplicialComplex::join(polygon(5), polygon(5));
    std::mt19937_64 rng(2);
    const auto forms = random_lsop(k, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_of_unity_check(k, forms, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartitionOfUnity)->Arg(1)->Arg(2)->Arg(3);

static void BM_BuildGammaComplex(benchmark::State& state) {
    const IntegerVector g =
        IntegerVector::gamma(std::vector<long long>{1, 22, 16}, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_gamma_complex(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildGammaComplex)->Arg(6)->Arg(8);

static void BM_HomologySphereCheck(benchmark::State& state) {
    const SimplicialComplex sd = barycentric_subdivision(simplex_boundary(4));
    for (auto _ : state) benchmark::DoNotOptimize(is_homology_sphere(sd));
}
BENCHMARK(BM_HomologySphereCheck);

BENCHMARK_MAIN();
