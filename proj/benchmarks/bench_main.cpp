#include <benchmark/benchmark.h>

#include "braidq/hidden_q.hpp"
#include "braidq/laws.hpp"

using namespace braidq;

namespace {

BraidWord torus_word(int k) {
  std::vector<int> ls(static_cast<size_t>(std::abs(k)), k >= 0 ? 1 : -1);
  return BraidWord(2, std::move(ls));
}

BraidWord seeded_word(std::uint64_t seed, int strands, int length) {
  Rng rng(seed);
  std::vector<int> ls;
  ls.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    int idx = rng.range(1, strands - 1);
    ls.push_back(rng.chance(1, 2) ? idx : -idx);
  }
  return BraidWord(strands, std::move(ls));
}

void BM_EvalTorusCold(benchmark::State& state) {
  BraidWord w = torus_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FEvaluator f({});
    benchmark::DoNotOptimize(f.eval(w));
  }
}
BENCHMARK(BM_EvalTorusCold)->Arg(5)->Arg(10)->Arg(15);

void BM_EvalMixedWarm(benchmark::State& state) {
  BraidWord w = seeded_word(42, 5, static_cast<int>(state.range(0)));
  FEvaluator f({});
  f.eval(w);  // warm the memo once
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(w));
  }
}
BENCHMARK(BM_EvalMixedWarm)->Arg(8)->Arg(12);

void BM_RecoverQ(benchmark::State& state) {
  BraidWord w = seeded_word(7, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FEvaluator f({});
    benchmark::DoNotOptimize(recover_Q(w, f).poly.degree());
  }
}
BENCHMARK(BM_RecoverQ)->Arg(6)->Arg(10);

void BM_SeriesWindow(benchmark::State& state) {
  FEvaluator f({});
  BraidWord w = seeded_word(11, 5, 10);
  RationalInvariant g = f.eval(w).substitute_a_to_ax();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        series_coefficients(g, 0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SeriesWindow)->Arg(16)->Arg(64);

void BM_QDirect(benchmark::State& state) {
  BraidWord w = seeded_word(13, 4, 8);
  for (auto _ : state) {
    FEvaluator f({});
    benchmark::DoNotOptimize(eval_Q_direct(w, f).poly.degree());
  }
}
BENCHMARK(BM_QDirect);

}  // namespace

BENCHMARK_MAIN();
