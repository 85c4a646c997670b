#include <benchmark/benchmark.h>

#include <string>

#include "pgg/decide.hpp"
#include "pgg/generators.hpp"
#include "pgg/oracle.hpp"
#include "pgg/subbases.hpp"

namespace {

pgg::PlanarEmbedding fixture(const std::string& name) {
  return pgg::load_pgg(std::string(PGG_FIXTURE_DIR) + "/" + name + ".pgg");
}

void BM_TraceFaces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = pgg::gen_grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(pgg::trace_faces(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceFaces)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = pgg::with_traced_faces(pgg::gen_grid(n, n + 1));
  const auto eq = pgg::equation_of(g.basis, g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(pgg::solve(eq));
}
BENCHMARK(BM_Solve)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = pgg::gen_grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(pgg::hamilton_oracle(g));
}
BENCHMARK(BM_OracleGrid)->Arg(4)->Arg(5)->Arg(6);

void BM_OracleTutte(benchmark::State& state) {
  const auto g = fixture("tutte");
  for (auto _ : state) benchmark::DoNotOptimize(pgg::hamilton_oracle(g));
}
BENCHMARK(BM_OracleTutte)->Unit(benchmark::kMillisecond);

void BM_DecideLenient(benchmark::State& state) {
  const auto g = pgg::with_traced_faces(fixture(state.range(0) ? "hole_hamiltonian" : "grid4"));
  pgg::DecideOptions opts;
  opts.claw = pgg::ClawMode::Lenient;
  for (auto _ : state) benchmark::DoNotOptimize(pgg::decide(g, opts));
}
BENCHMARK(BM_DecideLenient)->Arg(0)->Arg(1);

void BM_TutteReduction(benchmark::State& state) {
  const auto g = pgg::with_traced_faces(fixture("tutte"));
  for (auto _ : state) {
    const auto d = pgg::decompose(g);
    benchmark::DoNotOptimize(pgg::decide_reduced(pgg::reduce_to_gg(g, d)));
  }
}
BENCHMARK(BM_TutteReduction);

}  // namespace

BENCHMARK_MAIN();
