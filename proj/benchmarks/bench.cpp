#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "braidinv/braid.hpp"
#include "braidinv/families.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/qinv.hpp"
#include "braidinv/tl.hpp"

using namespace braidinv;

namespace {

// Random word on n strands of about the given length; retries until the closure is a knot.
// An n-cycle has the parity of n - 1, so the length is bumped to match.
BraidWord knot_word(int n, int length, unsigned seed) {
  if ((length - n + 1) % 2 != 0) ++length;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  for (;;) {
    std::vector<BraidLetter> letters;
    for (int k = 0; k < length; ++k) {
      const int i = index(rng);
      letters.push_back(sign(rng) ? BraidLetter::pos(i) : BraidLetter::neg(i));
    }
    BraidWord w(n, std::move(letters));
    if (is_knot(w)) return w;
  }
}

void BM_Phi(benchmark::State& state) {
  const auto w = knot_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(phi(w));
}
BENCHMARK(BM_Phi)->Args({4, 10})->Args({5, 12})->Args({6, 14})->Args({7, 16});

void BM_PhiPower(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_power(5, 2, k));
}
BENCHMARK(BM_PhiPower)->Arg(4)->Arg(16)->Arg(64);

void BM_FiedlerPoly(benchmark::State& state) {
  const auto w = knot_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fiedler_poly(w));
}
BENCHMARK(BM_FiedlerPoly)->Args({4, 10})->Args({8, 40})->Args({16, 160});

void BM_QInvariant(benchmark::State& state) {
  const auto w = knot_word(static_cast<int>(state.range(0)), 10, 3);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(q_invariant(w, k));
}
BENCHMARK(BM_QInvariant)->Args({4, 1})->Args({4, 2})->Args({5, 2})->Args({6, 2});

void BM_QDifferenceExample1(benchmark::State& state) {
  const auto pair = example1_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(q_difference(pair, 2));
}
BENCHMARK(BM_QDifferenceExample1)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
