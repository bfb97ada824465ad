#include <benchmark/benchmark.h>

#include "instanton/dedekind.hpp"
#include "instanton/eta.hpp"
#include "instanton/group_catalog.hpp"
#include "instanton/subgroups.hpp"

using namespace instanton;

static void BM_SSumFast(benchmark::State& state) {
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::s_sum(c / 3 + 1, c));
}
BENCHMARK(BM_SSumFast)->Arg(101)->Arg(10007)->Arg(1000003);

static void BM_SSumBrute(benchmark::State& state) {
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::s_sum(c / 3 + 1, c, dedekind::Method::brute));
}
BENCHMARK(BM_SSumBrute)->Arg(101)->Arg(10007);

static void BM_ConstructGroup(benchmark::State& state) {
  const auto spec = state.range(0) == 0 ? groups::GroupSpec::binary_icosahedral()
                                        : groups::GroupSpec::binary_dihedral(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(groups::construct_group(spec));
}
BENCHMARK(BM_ConstructGroup)->Arg(0)->Arg(24)->Arg(90);

static void BM_NormalSubgroupsOStar(benchmark::State& state) {
  const auto g = groups::construct_group(groups::GroupSpec::binary_octahedral());
  for (auto _ : state) benchmark::DoNotOptimize(groups::normal_subgroups(g));
}
BENCHMARK(BM_NormalSubgroupsOStar);

static void BM_EtaSpaceForm(benchmark::State& state) {
  const auto rep = dihedral_representation(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(eta_space_form(rep));
}
BENCHMARK(BM_EtaSpaceForm)->Arg(7)->Arg(23);
BENCHMARK_MAIN();
