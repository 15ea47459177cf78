#include <benchmark/benchmark.h>

#include "blowup/blowup.hpp"
#include "blowup/foliation.hpp"
#include "blowup/groebner.hpp"
#include "blowup/parser.hpp"

using namespace blowup;

namespace {

Ideal ideal_of(const std::vector<std::string>& vars, const std::string& text) {
  auto ring = make_ring(vars);
  return Ideal(ring, parse_polynomial_list(text, ring));
}

void BM_BuchbergerCyclic3(benchmark::State& state) {
  Ideal I = ideal_of({"a", "b", "c"}, "(a + b + c, a*b + b*c + c*a, a*b*c - 1)");
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I.generators(), I.ring()));
}
BENCHMARK(BM_BuchbergerCyclic3);

void BM_BuchbergerTwistedCubic(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y", "z", "w"}, "(x*z - y^2, y*w - z^2, x*w - y*z)");
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I.generators(), I.ring()));
}
BENCHMARK(BM_BuchbergerTwistedCubic);

void BM_Saturate(benchmark::State& state) {
  auto ring = make_ring({"x", "y", "s"});
  auto gens = parse_polynomial_list("(s^3*x^2 - s^5*y^3, s^2*x*y)", ring);
  auto s = Polynomial::variable(ring, "s");
  for (auto _ : state) benchmark::DoNotOptimize(saturate(gens, s));
}
BENCHMARK(BM_Saturate);

void BM_InvariantWhitney(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y", "z"}, "x^2 - y^2*z");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_and_center(I, Point::origin(I.ring())));
}
BENCHMARK(BM_InvariantWhitney);

void BM_InvariantPlaneCurve(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y"}, "x^5 + x^3*y^3 + y^100");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_and_center(I, Point::origin(I.ring())));
}
BENCHMARK(BM_InvariantPlaneCurve);

void BM_InvariantCusp(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  Ideal I = ideal_of({"x", "y"}, "x^2 + y^" + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_and_center(I, Point::origin(I.ring())));
}
BENCHMARK(BM_InvariantCusp)->RangeMultiplier(4)->Range(3, 192);

void BM_CriterionWhitney(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y", "z"}, "x^2 - y^2*z");
  Center c = invariant_and_center(I, Point::origin(I.ring())).center;
  for (auto _ : state) benchmark::DoNotOptimize(check_criterion(I, c, Point::origin(I.ring())));
}
BENCHMARK(BM_CriterionWhitney)->Unit(benchmark::kMillisecond);

void BM_PrincipalizePlaneCurve(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y"}, "x^5 + x^3*y^3 + y^100");
  for (auto _ : state) benchmark::DoNotOptimize(principalize(I));
}
BENCHMARK(BM_PrincipalizePlaneCurve)->Unit(benchmark::kMillisecond);

void BM_PrincipalizeWhitney(benchmark::State& state) {
  Ideal I = ideal_of({"x", "y", "z"}, "x^2 - y^2*z");
  for (auto _ : state) benchmark::DoNotOptimize(principalize(I));
}
BENCHMARK(BM_PrincipalizeWhitney)->Unit(benchmark::kMillisecond);

void BM_GraphReduction(benchmark::State& state) {
  auto ring = make_ring({"x", "y"});
  std::vector<Polynomial> f = {parse_polynomial("y^3 + x^2", ring)};
  for (auto _ : state) benchmark::DoNotOptimize(graph_reduction(f, Ideal(ring)));
}
BENCHMARK(BM_GraphReduction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
