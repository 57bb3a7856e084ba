#include <benchmark/benchmark.h>

#include "infsimp/campaign.hpp"
#include "infsimp/random.hpp"

using namespace infsimp;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

SparseMatrix random_matrix(Rng& rng, int n, int density) {
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
  for (auto& r : rows)
    for (auto& x : r)
      if (rng.chance(density)) x = Scalar(rng.range(-5, 5));
  return SparseMatrix::from_dense(rows);
}

void BM_multiply(benchmark::State& s) {
  Rng rng(1);
  auto a = random_matrix(rng, 160, 20), b = random_matrix(rng, 160, 20);
  for (auto _ : s) benchmark::DoNotOptimize(multiply(a, b, exec_of(s)));
}

struct TensorFixture {
  ComplexPtr base;
  std::vector<GradedMap> factors;
  TensorFixture() {
    Rng rng(2);
    base = random_complex(rng, {2, 3, 2}, Ring::rationals(), 2, 60, "C");
    for (int i = 0; i < 3; ++i) factors.push_back(random_map(rng, Space{base, 1}, Space{base, 1}, i % 2));
  }
};

void BM_tensor(benchmark::State& s) {
  static TensorFixture fx;
  for (auto _ : s) benchmark::DoNotOptimize(tensor(fx.factors, exec_of(s)));
}

const Instance& corpus() {
  static const Instance inst = build_corpus(CorpusSpec{});
  return inst;
}

void BM_check_faces(benchmark::State& s) {
  static const ModulePtr x = tensor_object(corpus().algebras.at("E2"), 6, {Exec::parallel, Mutation::none, false});
  CheckOptions opt;
  opt.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(check_faces(*x, opt));
}

void BM_tensor_object(benchmark::State& s) {
  const auto a = corpus().algebras.at("E2");
  FunctorOptions fo{exec_of(s), Mutation::none, false};
  for (auto _ : s) benchmark::DoNotOptimize(tensor_object(a, 5, fo));
}

}  // namespace

// Argument 0: serial reference kernel, 1: OpenMP kernel.
BENCHMARK(BM_multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tensor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_faces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tensor_object)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
