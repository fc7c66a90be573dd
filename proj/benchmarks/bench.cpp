#include "difflie/drbl.hpp"
#include "difflie/gsb.hpp"
#include "difflie/lyndon.hpp"
#include "difflie/text.hpp"

#include <benchmark/benchmark.h>

using namespace difflie;

static void ApplyD(benchmark::State& state) {
  auto alphabet = Alphabet::numbered(2);
  auto p = parse_poly("x1 x2 P(x1) D(x2) x1 + 3 P(x1 x2) x2 x2", alphabet);
  const auto times = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_D(p, 2, times));
}
BENCHMARK(ApplyD)->DenseRange(1, 3);

static void EnumerateAlsw(benchmark::State& state) {
  auto alphabet = Alphabet::numbered(2);
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_alsw(alphabet, degree));
}
BENCHMARK(EnumerateAlsw)->DenseRange(4, 6);

static void EnumerateBasis(benchmark::State& state) {
  auto alphabet = Alphabet::numbered(2);
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(alphabet, degree));
}
BENCHMARK(EnumerateBasis)->DenseRange(4, 6);

static void DrblNormalForm(benchmark::State& state) {
  auto sys = DrblSystem::numbered(2, 1, 8);
  auto p = lie_expand(parse_naword("[P([P(x1) x2]) P(D(x1))]", sys.alphabet()));
  for (auto _ : state) benchmark::DoNotOptimize(drbl_nf(p, sys));
}
BENCHMARK(DrblNormalForm);

static void RuleReduction(benchmark::State& state) {
  auto sys = DrblSystem::numbered(2, 1, 6);
  RuleSet rules(instantiate_rules(sys, 6), 1, 6);
  auto p = lie_expand(parse_naword("[P([P(x1) x2]) P(x1)]", sys.alphabet()));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_lie(p, rules));
}
BENCHMARK(RuleReduction);

static void CheckGsb(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  auto sys = DrblSystem::numbered(2, 1, degree);
  RuleSet rules(instantiate_rules(sys, degree), 1, degree);
  for (auto _ : state) benchmark::DoNotOptimize(is_gsb(rules, degree, Mode::lie));
}
BENCHMARK(CheckGsb)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
