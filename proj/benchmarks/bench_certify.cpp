#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "hypcert/certify.hpp"
#include "hypcert/eigen.hpp"
#include "hypcert/int_matrix.hpp"
#include "hypcert/snap.hpp"

namespace {

std::string fixture(const char* name) {
  return std::string(HYPCERT_FIXTURE_DIR) + "/" + name;
}

void BM_CertifyFig8(benchmark::State& state) {
  hypcert::ManifoldProblem p = hypcert::read_manifold_file(fixture("fig8.mfd"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypcert::certify(p));
  }
}
BENCHMARK(BM_CertifyFig8);

void BM_CertifyWhitehead(benchmark::State& state) {
  hypcert::ManifoldProblem p =
      hypcert::read_manifold_file(fixture("whitehead_9872_11111.mfd"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypcert::certify(p));
  }
}
BENCHMARK(BM_CertifyWhitehead);

void BM_CertifyLargelink(benchmark::State& state) {
  hypcert::ManifoldProblem p = hypcert::read_manifold_file(fixture("largelink.mfd"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypcert::certify(p));
  }
}
BENCHMARK(BM_CertifyLargelink);

void BM_ExactRankLargelink(benchmark::State& state) {
  hypcert::ManifoldProblem p = hypcert::read_manifold_file(fixture("largelink.mfd"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypcert::exact_rank(p.fg));
  }
}
BENCHMARK(BM_ExactRankLargelink);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hypcert::Precision prec(60);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coef(-9, 9);
  hypcert::HPMatrix a(n, n, prec);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = hypcert::HPComplex(coef(rng), coef(rng), prec);
    }
  }
  hypcert::HPMatrix d(n, n, prec);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      hypcert::HPComplex sum(prec);
      for (int m = 0; m < n; ++m) {
        sum += a.at(m, i) * conj(a.at(m, j));
      }
      d.at(i, j) = sum;
    }
  }
  d = [&] {  // shift to guarantee positive definiteness for any draw
    hypcert::HPMatrix shifted = d;
    for (int i = 0; i < n; ++i) {
      shifted.at(i, i) += hypcert::HPComplex(1, 0, prec);
    }
    return shifted;
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypcert::hermitian_eigenvalues(d));
  }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
