#include <benchmark/benchmark.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pcgraph/codes.hpp"
#include "pcgraph/examples.hpp"
#include "pcgraph/mat.hpp"
#include "pcgraph/oracle.hpp"
#include "pcgraph/qbinomial.hpp"
#include "pcgraph/topclique.hpp"

namespace {

// Seeded dense matrix with arbitrary entries; rank is whatever it is. Used
// only by the elimination benchmarks, which do not care about projectivity.
pcg::Mat random_mat(const pcg::Field& f, std::size_t rows, std::size_t cols,
                    std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<pcg::Elem> pick(0, f.q() - 1);
    pcg::Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(rng);
    return m;
}

const pcg::Mat& bundled(std::size_t idx) {
    static const std::vector<pcg::Mat> mats = [] {
        std::vector<pcg::Mat> out;
        for (const auto& ex : pcg::bundled_examples())
            out.push_back(pcg::example_matrix(ex));
        return out;
    }();
    return mats.at(idx);
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
    const auto f = pcg::Field::make(static_cast<std::uint64_t>(state.range(1)));
    const auto n = static_cast<std::size_t>(state.range(0));
    const pcg::Mat m = random_mat(f, n, 2 * n, 7);
    for (auto _ : state) {
        auto r = pcg::rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_Rref)
    ->Args({8, 2})
    ->Args({32, 2})
    ->Args({128, 2})
    ->Args({32, 3})
    ->Args({32, 9});

// Clique construction alone: scan for admissible vectors, span C(y) for each.
static void BM_TopClique(benchmark::State& state, std::size_t idx) {
    const pcg::Mat& m = bundled(idx);
    for (auto _ : state) {
        auto clique = pcg::top_clique(m);
        benchmark::DoNotOptimize(clique.size());
    }
}
BENCHMARK_CAPTURE(BM_TopClique, singleton, 0);
BENCHMARK_CAPTURE(BM_TopClique, no_line, 2);

// Full pipeline: clique, core, line classification, maximality verdict.
static void BM_Analyze(benchmark::State& state, std::size_t idx) {
    const pcg::Mat& m = bundled(idx);
    for (auto _ : state) {
        auto an = pcg::analyze(m);
        benchmark::DoNotOptimize(an.verdict.is_top);
    }
}
BENCHMARK_CAPTURE(BM_Analyze, singleton, 0);
BENCHMARK_CAPTURE(BM_Analyze, one_line, 1);
BENCHMARK_CAPTURE(BM_Analyze, no_line, 2);
BENCHMARK_CAPTURE(BM_Analyze, star, 3);

// Candidate-set witness search, the expensive half of the oracle.
static void BM_MaximalityCheck(benchmark::State& state, std::size_t idx) {
    auto clique = pcg::top_clique(bundled(idx));
    for (auto _ : state) {
        auto r = pcg::maximality_check(clique);
        benchmark::DoNotOptimize(r.maximal);
    }
}
BENCHMARK_CAPTURE(BM_MaximalityCheck, one_line, 1);
BENCHMARK_CAPTURE(BM_MaximalityCheck, no_line, 2);
BENCHMARK_CAPTURE(BM_MaximalityCheck, star, 3);

// Definition-level clique: enumerate all hyperplanes, keep projective ones.
static void BM_BruteForceClique(benchmark::State& state, std::size_t idx) {
    const pcg::Code u = pcg::Code::from_generator(bundled(idx));
    for (auto _ : state) {
        auto clique = pcg::brute_force_clique(u);
        benchmark::DoNotOptimize(clique.size());
    }
}
BENCHMARK_CAPTURE(BM_BruteForceClique, no_line, 2);
BENCHMARK_CAPTURE(BM_BruteForceClique, star, 3);

// Central binomial [n, n/2]_2 via the q-Pascal triangle; exact big integers.
static void BM_QBinomial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto v = pcg::q_binomial(n, n / 2, 2);
        benchmark::DoNotOptimize(v.is_zero());
    }
}
BENCHMARK(BM_QBinomial)->RangeMultiplier(2)->Range(32, 256);

BENCHMARK_MAIN();
