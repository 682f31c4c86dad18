#include <benchmark/benchmark.h>

#include "capitula/analysis.hpp"

namespace {

void BM_FundamentalUnit(benchmark::State& state) {
  const capitula::Integer d(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(capitula::fundamental_unit(d));
}
BENCHMARK(BM_FundamentalUnit)->Arg(195)->Arg(9199)->Arg(6952267);

void BM_SquareClassPair(benchmark::State& state) {
  const capitula::QuadraticUnit u =
      capitula::fundamental_unit(capitula::Integer(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(capitula::square_class_pair(u));
}
BENCHMARK(BM_SquareClassPair)->Arg(455)->Arg(6952267);

void BM_AnalyzeTriple(benchmark::State& state) {
  const capitula::PrimeTriple t = capitula::make_triple(
      capitula::Integer(state.range(0)), capitula::Integer(state.range(1)),
      capitula::Integer(state.range(2)));
  for (auto _ : state)
    benchmark::DoNotOptimize(capitula::analyze_triple(t));
}
BENCHMARK(BM_AnalyzeTriple)->Args({5, 13, 3})->Args({181, 193, 199});

void BM_SpanOrder(benchmark::State& state) {
  using capitula::ClassWord;
  const capitula::WordList words = {ClassWord::H(1), ClassWord::H(2),
                                    ClassWord::H(3) + ClassWord::H(4)};
  const capitula::RelationSet rel =
      capitula::relations_for(capitula::DPattern::P2);
  for (auto _ : state)
    benchmark::DoNotOptimize(capitula::span_order(words, rel));
}
BENCHMARK(BM_SpanOrder);

}  // namespace
