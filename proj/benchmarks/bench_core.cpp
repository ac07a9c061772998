// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the exact-arithmetic kernels that dominate the word
// scans and moduli computations.

#include <benchmark/benchmark.h>

#include "linkcomm/moebius.hpp"
#include "linkcomm/numfield.hpp"

namespace {

using namespace linkcomm;

void BM_FieldMultiply(benchmark::State& state) {
  const NumberFieldElement x(Rational(3, 2), Rational(-5, 3), Rational(7), Rational(1, 4));
  const NumberFieldElement y(Rational(-2, 7), Rational(4), Rational(-1, 3), Rational(9, 2));
  NumberFieldElement acc(1);
  for (auto _ : state) {
    acc = x * y;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMultiply);

void BM_CharPoly(benchmark::State& state) {
  const NumberFieldElement x(Rational(3, 2), Rational(-5, 3), Rational(7), Rational(1, 4));
  for (auto _ : state) {
    auto p = x.char_poly();
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CharPoly);

void BM_IntegerIntegrality(benchmark::State& state) {
  const NumberFieldElement x(Rational(3), Rational(-5), Rational(7), Rational(2));
  for (auto _ : state) {
    bool b = x.is_algebraic_integer();
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_IntegerIntegrality);

void BM_MoebiusCompose(benchmark::State& state) {
  const ExtendedMoebius t = builtin_generators().at("t");
  const ExtendedMoebius g = builtin_generators().at("g");
  ExtendedMoebius acc;
  for (auto _ : state) {
    acc = t * g;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_MoebiusCompose);

void BM_WordEvaluate(benchmark::State& state) {
  const GroupWord w = parse_word("s t s t^-2 g h^-1 c^2 m1");
  for (auto _ : state) {
    auto x = evaluate_word(w, builtin_generators());
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_WordEvaluate);

}  // namespace

BENCHMARK_MAIN();
