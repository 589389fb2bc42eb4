#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "histograph/historiograph.hpp"
#include "histograph/ingest.hpp"
#include "histograph/weibull.hpp"

using namespace histograph;

namespace {

Collection load(const char* name) {
  std::ifstream in(std::string(HISTOGRAPH_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_export(ss.str()).collection;
}

void BM_ParseExport(benchmark::State& state) {
  std::ifstream in(std::string(HISTOGRAPH_FIXTURE_DIR) + "/muscle_2002.txt", std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto text = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(parse_export(text));
}
BENCHMARK(BM_ParseExport);

void BM_LinkCitations(benchmark::State& state) {
  const auto c = load("muscle_2002.txt");
  for (auto _ : state) benchmark::DoNotOptimize(link_citations(c));
}
BENCHMARK(BM_LinkCitations);

void BM_MainPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(8.0 / static_cast<double>(n));
  std::vector<Edge> flow;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (coin(rng)) flow.push_back({i, j});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(main_path(n, flow));
}
BENCHMARK(BM_MainPath)->Arg(100)->Arg(1000);

void BM_WeibullFit(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::weibull_distribution<double> dist(1.5, 3.0);
  std::vector<AgeObservation> data;
  for (int i = 0; i < state.range(0); ++i) data.push_back({dist(rng), false});
  for (auto _ : state) benchmark::DoNotOptimize(weibull_fit(data));
}
BENCHMARK(BM_WeibullFit)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
