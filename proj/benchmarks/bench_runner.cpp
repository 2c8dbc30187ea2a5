#include <benchmark/benchmark.h>

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "exemplar/graph.hpp"
#include "exemplar/registry.hpp"
#include "exemplar/runner.hpp"
#include "exemplar/value.hpp"

namespace {

using namespace exemplar;

ExampleValue int_value(int n) {
  return make_value<int>("Int", n, [](const int& v) {
    return FieldList{{"value", std::to_string(v)}};
  });
}

ExampleRegistry chain_registry(int length) {
  ExampleRegistry reg;
  std::string prev;
  for (int i = 0; i < length; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "n%04d", i);
    std::vector<ExampleId> deps;
    if (!prev.empty()) deps.emplace_back(prev);
    reg.add(ExampleDefinition(ExampleId(name), std::move(deps),
                              [](std::span<const ExampleValue> in) {
                                int sum = 1;
                                for (const auto& v : in) sum += value_as<int>(v);
                                return int_value(sum);
                              }));
    prev = name;
  }
  return reg;
}

ExampleRegistry random_registry(int nodes, unsigned seed) {
  std::mt19937 rng(seed);
  ExampleRegistry reg;
  std::vector<std::string> ids;
  for (int i = 0; i < nodes; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "n%04d", i);
    ids.emplace_back(name);
    std::vector<ExampleId> deps;
    int avail = std::min(3, i);
    if (avail > 0) {
      int k = std::uniform_int_distribution<int>(0, avail)(rng);
      std::set<int> picked;
      while (static_cast<int>(picked.size()) < k)
        picked.insert(std::uniform_int_distribution<int>(0, i - 1)(rng));
      for (int p : picked) deps.emplace_back(ids[static_cast<std::size_t>(p)]);
    }
    reg.add(ExampleDefinition(ExampleId(name), std::move(deps),
                              [](std::span<const ExampleValue> in) {
                                int sum = 1;
                                for (const auto& v : in) sum += value_as<int>(v);
                                return int_value(sum);
                              }));
  }
  return reg;
}

void BM_BuildGraph(benchmark::State& state) {
  auto reg = random_registry(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    auto graph = build_graph(reg);
    benchmark::DoNotOptimize(graph.topo_order().size());
  }
}
BENCHMARK(BM_BuildGraph)->Arg(64)->Arg(512)->Arg(4096);

void BM_RunChainShared(benchmark::State& state) {
  auto reg = chain_registry(static_cast<int>(state.range(0)));
  auto graph = build_graph(reg);
  for (auto _ : state) {
    auto report = run_all(graph, {.sharing = Sharing::Share});
    benchmark::DoNotOptimize(report.counts.passed);
  }
}
BENCHMARK(BM_RunChainShared)->Arg(16)->Arg(128)->Arg(1024);

void BM_RunChainFresh(benchmark::State& state) {
  // No duplicators, so every dependent re-runs its producing subchain; the
  // chain makes that cost quadratic and worth watching.
  auto reg = chain_registry(static_cast<int>(state.range(0)));
  auto graph = build_graph(reg);
  for (auto _ : state) {
    auto report = run_all(graph, {.sharing = Sharing::Fresh});
    benchmark::DoNotOptimize(report.counts.passed);
  }
}
BENCHMARK(BM_RunChainFresh)->Arg(16)->Arg(64)->Arg(256);

void BM_RunRandomDag(benchmark::State& state) {
  auto reg = random_registry(static_cast<int>(state.range(0)), 7);
  auto graph = build_graph(reg);
  for (auto _ : state) {
    auto report = run_all(graph);
    benchmark::DoNotOptimize(report.counts.passed);
  }
}
BENCHMARK(BM_RunRandomDag)->Arg(64)->Arg(512)->Arg(4096);

void BM_ReportJson(benchmark::State& state) {
  auto reg = random_registry(static_cast<int>(state.range(0)), 7);
  auto graph = build_graph(reg);
  auto report = run_all(graph);
  for (auto _ : state) {
    auto json = report_to_json(report);
    benchmark::DoNotOptimize(json.size());
  }
}
BENCHMARK(BM_ReportJson)->Arg(64)->Arg(512)->Arg(4096);

void BM_TransitiveDependents(benchmark::State& state) {
  auto reg = random_registry(static_cast<int>(state.range(0)), 7);
  auto graph = build_graph(reg);
  const auto& first = *graph.nodes().begin();
  for (auto _ : state) {
    auto dependents = graph.transitive_dependents(first);
    benchmark::DoNotOptimize(dependents.size());
  }
}
BENCHMARK(BM_TransitiveDependents)->Arg(64)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
