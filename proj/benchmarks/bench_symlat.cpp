/*
   Copyright 2026 The symlat Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "symlat/fixedpoints.hpp"
#include "symlat/lattice.hpp"
#include "symlat/solutions.hpp"

namespace {

using namespace symlat;

ModulePresentation principal(std::size_t n, const char* text, int conductor = 1) {
  return ModulePresentation{n, 1, conductor, {ModuleVector({LaurentPoly::parse(n, conductor, text)})}};
}

GroupTable swap2() { return generate_group(2, 1, {AutElement::monomial_map({{0, 1}, {1, 0}}, 1)}); }

void BM_CyclotomicMultiply(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Cyclotomic a = Cyclotomic::parse(N, "1/2*z^1 + -3*z^2 + 5/7"), b = Cyclotomic::parse(N, "2*z^3 + -1/3*z^1");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(5)->Arg(12)->Arg(30);

void BM_CyclotomicInverse(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Cyclotomic a = Cyclotomic::parse(N, "1/2*z^1 + -3*z^2 + 5/7");
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(12)->Arg(30);

void BM_GenerateGroup(benchmark::State& state) {
  std::vector<AutElement> gens{AutElement::monomial_map({{0, -1}, {1, 0}}, 4),
                               AutElement::homothety({Cyclotomic::root_of_unity(4, 1), Cyclotomic::one(4)})};
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(2, 4, gens).order());
}
BENCHMARK(BM_GenerateGroup);

void BM_SubmoduleWindowSpace(benchmark::State& state) {
  auto p = principal(2, "s1 - s2");
  Window w = ball_window(2, state.range(0), Norm::L1);
  for (auto _ : state) benchmark::DoNotOptimize(submodule_window_space(p, w, 1).dimension());
  state.SetComplexityN(static_cast<benchmark::IterationCount>(w.size()));
}
BENCHMARK(BM_SubmoduleWindowSpace)->DenseRange(2, 8, 2)->Complexity();

void BM_SymmetricDimensionReflection(benchmark::State& state) {
  auto p = principal(1, "s1^1 + s1^-1");
  auto g = generate_group(1, 1, {AutElement::monomial_map({{-1}}, 1)});
  WindowSchedule s;
  for (std::int64_t r = 1; r <= state.range(0); ++r) s.radii.push_back(r);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_dimension(p, g, s).verdict.value);
}
BENCHMARK(BM_SymmetricDimensionReflection)->Arg(6)->Arg(12)->Arg(24);

void BM_SymmetricDimensionSwap(benchmark::State& state) {
  auto p = principal(2, "s1 - s2");
  auto g = swap2();
  WindowSchedule s;
  s.norm = Norm::L1;
  s.pads = {0, 1, 2};
  for (std::int64_t r = 1; r <= state.range(0); ++r) s.radii.push_back(r);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_dimension(p, g, s).schedule.size());
}
BENCHMARK(BM_SymmetricDimensionSwap)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SymmetricSolutionBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto p = principal(1, ("1 - s1^" + std::to_string(d)).c_str(), d);
  auto g = generate_group(1, d, {AutElement::homothety({Cyclotomic::root_of_unity(d, 1)})});
  Window w = ball_window(1, 4 * d, Norm::Linf);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_solution_basis(p, g, w, d).size());
}
BENCHMARK(BM_SymmetricSolutionBasis)->Arg(2)->Arg(3)->Arg(5);

void BM_InvariantSublattice(benchmark::State& state) {
  auto g = generate_group(2, 6,
                          {AutElement::homothety({Cyclotomic::root_of_unity(6, 1), Cyclotomic::root_of_unity(6, 2)}),
                           AutElement::monomial_map({{0, 1}, {1, 0}}, 6)});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_sublattice(g).index());
}
BENCHMARK(BM_InvariantSublattice);

void BM_AllSymmetricCheck(benchmark::State& state) {
  auto p = principal(1, "s1^1 - s1^-1");
  auto g = generate_group(1, 1, {AutElement::monomial_map({{-1}}, 1)});
  Window sample = ball_window(1, state.range(0), Norm::Linf);
  for (auto _ : state) benchmark::DoNotOptimize(all_solutions_symmetric_check(p, g, sample, 4).holds);
}
BENCHMARK(BM_AllSymmetricCheck)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
