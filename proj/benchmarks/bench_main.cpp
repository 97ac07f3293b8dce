// Microbenchmarks for the hot paths: field arithmetic, construction,
// verification, subspace reduction, and the backtracking search.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "mosaics/construct.hpp"
#include "mosaics/design.hpp"
#include "mosaics/finite_field.hpp"
#include "mosaics/mosaic.hpp"
#include "mosaics/qdesign.hpp"
#include "mosaics/search.hpp"

namespace {

void BM_FieldMulGF2_13(benchmark::State& state) {
  mosaics::FieldSpec f(2, 13);
  std::mt19937_64 rng(1);
  std::vector<int> xs(1024), ys(1024);
  for (int i = 0; i < 1024; ++i) {
    xs[static_cast<size_t>(i)] = static_cast<int>(rng() % 8192);
    ys[static_cast<size_t>(i)] = static_cast<int>(rng() % 8192);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(xs[i & 1023], ys[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_FieldMulGF2_13);

void BM_FieldInvGF2_13(benchmark::State& state) {
  mosaics::FieldSpec f(2, 13);
  std::mt19937_64 rng(2);
  std::vector<int> xs(1024);
  for (int i = 0; i < 1024; ++i)
    xs[static_cast<size_t>(i)] = 1 + static_cast<int>(rng() % 8191);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.inv(xs[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_FieldInvGF2_13);

void BM_PaleyConstruct31(benchmark::State& state) {
  for (auto _ : state) {
    mosaics::Mosaic m = mosaics::paley_mosaic(31);
    benchmark::DoNotOptimize(m.cell(0, 0));
  }
}
BENCHMARK(BM_PaleyConstruct31);

void BM_PaleyVerify31(benchmark::State& state) {
  mosaics::Mosaic m = mosaics::paley_mosaic(31);
  for (auto _ : state) {
    mosaics::MosaicCheck mc = mosaics::verify_mosaic(m);
    benchmark::DoNotOptimize(mc.ok);
  }
}
BENCHMARK(BM_PaleyVerify31);

void BM_SubspaceSpanDim3(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<std::array<uint64_t, 3>> gens(256);
  for (auto& g : gens)
    for (uint64_t& x : g) x = rng() & 0x1fff;
  size_t i = 0;
  for (auto _ : state) {
    const auto& g = gens[i & 255];
    mosaics::Subspace s = mosaics::Subspace::span(13, g);
    benchmark::DoNotOptimize(s.dim());
    ++i;
  }
}
BENCHMARK(BM_SubspaceSpanDim3);

void BM_SubspaceCanonicalKey(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<mosaics::Subspace> spaces;
  for (int i = 0; i < 256; ++i) {
    std::array<uint64_t, 3> g{rng() & 0x1fff, rng() & 0x1fff,
                              rng() & 0x1fff};
    spaces.push_back(mosaics::Subspace::span(13, g));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spaces[i & 255].canonical_key());
    ++i;
  }
}
BENCHMARK(BM_SubspaceCanonicalKey);

void BM_GaussianBinomial13(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mosaics::gaussian_binomial_ll(13, 3, 2));
}
BENCHMARK(BM_GaussianBinomial13);

void BM_VerifyQDesignLines10(benchmark::State& state) {
  std::vector<mosaics::Subspace> lines;
  for (uint64_t x = 1; x < (uint64_t{1} << 10); ++x) {
    std::vector<uint64_t> g{x};
    lines.push_back(mosaics::Subspace::span(10, g));
  }
  mosaics::QDesign d(10, std::move(lines));
  for (auto _ : state) {
    mosaics::QDesignCheck qc = mosaics::verify_qdesign(d, 1, 1);
    benchmark::DoNotOptimize(qc.ok);
  }
}
BENCHMARK(BM_VerifyQDesignLines10);

void BM_SearchPaley7(benchmark::State& state) {
  mosaics::SearchProblem p(mosaics::paley_mosaic(7).scheme());
  for (int i = 1; i <= 3; ++i)
    p.pools.push_back(mosaics::all_k_subsets_pool(7, p.scheme.colour(i).k));
  for (auto _ : state) {
    mosaics::SearchOutcome o = mosaics::search_mosaic(p);
    benchmark::DoNotOptimize(o.stats.nodes);
  }
}
BENCHMARK(BM_SearchPaley7);

}  // namespace

BENCHMARK_MAIN();
