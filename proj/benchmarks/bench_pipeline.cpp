#include <string>

#include <benchmark/benchmark.h>

#include "reebsym/fixtures.hpp"
#include "reebsym/lift.hpp"
#include "reebsym/srf.hpp"

namespace {

reebsym::FieldSurface beachball(int k) {
  return reebsym::to_field_surface(reebsym::make_fixture(reebsym::FixtureSpec::parse("beachball(" + std::to_string(k) + ")")));
}

int centre_vertex(const reebsym::ReebGraph& g) {
  for (const auto& v : g.vertices())
    if (g.degree(v.id) > 2) return v.id;
  return 0;
}

void BM_Reeb(benchmark::State& state) {
  const auto s = beachball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::compute_reeb(s.complex, s.field));
  state.counters["vertices"] = s.complex.vertex_count();
}
BENCHMARK(BM_Reeb)->DenseRange(2, 12, 2);

void BM_StabilizerGroup(benchmark::State& state) {
  const auto s = beachball(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::compute_stabilizer_group(s.complex, s.field));
}
BENCHMARK(BM_StabilizerGroup)->DenseRange(2, 12, 2);

void BM_ConstructSection(benchmark::State& state) {
  const auto s = beachball(static_cast<int>(state.range(0)));
  const auto reeb = reebsym::compute_reeb(s.complex, s.field);
  const auto problem = reebsym::prepare_lift(s.complex, s.field, centre_vertex(reeb.graph), {});
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::construct_section(problem));
}
BENCHMARK(BM_ConstructSection)->DenseRange(2, 8, 2);

void BM_SectionOracle(benchmark::State& state) {
  const auto s = beachball(static_cast<int>(state.range(0)));
  const auto reeb = reebsym::compute_reeb(s.complex, s.field);
  const auto section = reebsym::construct_section(reebsym::prepare_lift(s.complex, s.field, centre_vertex(reeb.graph), {}));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::find_section_oracle(section.refined, section.subgroup));
}
BENCHMARK(BM_SectionOracle)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
