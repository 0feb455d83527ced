// Microbenchmarks for the hot paths: canonical-form computation, ball
// construction, cell complex assembly, and Smith normal form.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cox/complex.hpp"
#include "cox/homology.hpp"
#include "cox/matrix.hpp"
#include "cox/nerve.hpp"
#include "cox/system.hpp"

using namespace cox;

namespace {

CoxeterMatrix fixture(const char* name) {
  return CoxeterMatrix::parse_file(std::string(COX_FIXTURE_DIR) + "/" + name);
}

// Deterministic random words over the generators; memo effects are part of
// what is being measured, so the system is rebuilt per benchmark, not per word.
std::vector<Word> random_words(int rank, int length, int count) {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> pick(0, rank - 1);
  std::vector<Word> words(count);
  for (Word& w : words)
    for (int i = 0; i < length; ++i) w.push_back(static_cast<Gen>(pick(rng)));
  return words;
}

void BM_NormalForm(benchmark::State& state) {
  CoxeterMatrix M = fixture("sysb.cox");
  auto words = random_words(static_cast<int>(M.rank()), static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    state.PauseTiming();
    CoxeterSystem W(M);  // fresh memo, so every iteration does the same work
    state.ResumeTiming();
    for (const Word& w : words) benchmark::DoNotOptimize(W.normal_form(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_NormalFormWarm(benchmark::State& state) {
  CoxeterMatrix M = fixture("sysb.cox");
  CoxeterSystem W(M);
  auto words = random_words(static_cast<int>(M.rank()), static_cast<int>(state.range(0)), 64);
  for (const Word& w : words) W.normal_form(w);  // warm the memo once
  for (auto _ : state)
    for (const Word& w : words) benchmark::DoNotOptimize(W.normal_form(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_NormalFormWarm)->Arg(8)->Arg(12)->Arg(16);

void BM_BallConstruction(benchmark::State& state) {
  CoxeterMatrix M = fixture("sysb.cox");
  for (auto _ : state) {
    state.PauseTiming();
    CoxeterSystem W(M);
    state.ResumeTiming();
    benchmark::DoNotOptimize(W.ball(static_cast<int>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BallConstruction)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CellComplex(benchmark::State& state) {
  CoxeterMatrix M = fixture("sysb.cox");
  CoxeterSystem W(M);
  for (auto _ : state) {
    BallComplex B(W.ball(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(B.cells().size());
  }
}
BENCHMARK(BM_CellComplex)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  CoxeterMatrix M = fixture("sysb.cox");
  CoxeterSystem W(M);
  BallComplex B(W.ball(static_cast<int>(state.range(0))));
  ChainComplex C(B.order_complex(B.cells()).simplices);
  for (auto _ : state) benchmark::DoNotOptimize(homology(C));
  state.SetLabel(std::to_string(C.total_size()) + " simplices");
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
