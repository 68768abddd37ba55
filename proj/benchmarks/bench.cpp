#include <benchmark/benchmark.h>

#include <fstream>
#include <map>
#include <string>

#include "kstate/invariants.hpp"
#include "kstate/oracle.hpp"
#include "kstate/polynomial.hpp"
#include "kstate/states.hpp"

namespace {

std::string corpus_line(const std::string& wanted) {
  std::ifstream in(std::string(KSTATE_DATA_DIR) + "/corpus.pd");
  std::string line;
  while (std::getline(in, line))
    if (line.find("# " + wanted) != std::string::npos)
      return line.substr(0, line.find('#'));
  throw std::runtime_error("missing corpus entry " + wanted);
}

kstate::PlanarDiagram load(const std::string& name) {
  return kstate::PlanarDiagram::from_pd(corpus_line(name));
}

void BM_parse(benchmark::State& state) {
  auto line = corpus_line("figure-eight-sum-4");
  for (auto _ : state)
    benchmark::DoNotOptimize(kstate::PlanarDiagram::from_pd(line));
}
BENCHMARK(BM_parse);

void BM_enumerate_states_t13(benchmark::State& state) {
  auto d = load("torus-2-13");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::enumerate_states(d));
}
BENCHMARK(BM_enumerate_states_t13);

void BM_enumerate_states_sum4(benchmark::State& state) {
  auto d = load("figure-eight-sum-4");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::enumerate_states(d));
}
BENCHMARK(BM_enumerate_states_sum4);

void BM_state_sum_sum4(benchmark::State& state) {
  auto d = load("figure-eight-sum-4");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::state_sum(d));
}
BENCHMARK(BM_state_sum_sum4);

void BM_brute_force_sum2(benchmark::State& state) {
  auto d = load("figure-eight-sum-2");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::brute_force_states(d));
}
BENCHMARK(BM_brute_force_sum2);

void BM_canonical_state_942(benchmark::State& state) {
  auto d = load("9_42");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::canonical_state(d));
}
BENCHMARK(BM_canonical_state_942);

void BM_clock_connected_942(benchmark::State& state) {
  auto d = load("9_42");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::clock_connected(d));
}
BENCHMARK(BM_clock_connected_942);

void BM_goeritz_signature_816(benchmark::State& state) {
  auto d = load("8_16");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::signature_goeritz(d));
}
BENCHMARK(BM_goeritz_signature_816);

void BM_hfk_table_816(benchmark::State& state) {
  auto d = load("8_16");
  for (auto _ : state) benchmark::DoNotOptimize(kstate::hfk_table(d));
}
BENCHMARK(BM_hfk_table_816);

}  // namespace

BENCHMARK_MAIN();
