#include <benchmark/benchmark.h>

#include <string>

#include "exemplar/demo/prices.hpp"
#include "exemplar/docbook.hpp"
#include "exemplar/render.hpp"

namespace {

using namespace exemplar;

std::string synthetic_page(int sections) {
  std::string page;
  for (int i = 0; i < sections; ++i) {
    page += "# Section " + std::to_string(i) + "\n\n";
    page += "Prose about prices, with `inline code` and a fence:\n\n";
    page += "```text\nnot a directive\n```\n\n";
    page += "```example\nid: prices.hundredEuros\nview: overview\n```\n\n";
  }
  return page;
}

void BM_ParseDocument(benchmark::State& state) {
  auto page = synthetic_page(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto doc = parse_document(page);
    benchmark::DoNotOptimize(doc.blocks.size());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(page.size()));
}
BENCHMARK(BM_ParseDocument)->Arg(8)->Arg(64)->Arg(512);

void BM_BuildDocument(benchmark::State& state) {
  auto env = demo::demo_environment();
  auto graph = build_graph(env.examples);
  auto doc = parse_document(synthetic_page(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto built = build_document(doc, graph, env.views);
    benchmark::DoNotOptimize(built.text.size());
  }
}
BENCHMARK(BM_BuildDocument)->Arg(8)->Arg(64)->Arg(512);

void BM_RenderOverviewMarkdown(benchmark::State& state) {
  using namespace exemplar::demo;
  Price price = as_price(Money(10000, "EUR"));
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    price = discounted_by(price, Discount::percent(100));
  for (auto _ : state) {
    auto md = to_markdown(price_overview(price));
    benchmark::DoNotOptimize(md.size());
  }
}
BENCHMARK(BM_RenderOverviewMarkdown)->Arg(1)->Arg(16)->Arg(64);

void BM_RenderWideTableText(benchmark::State& state) {
  std::vector<std::string> columns{"step", "price", "delta", "note"};
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    rows.push_back({"step " + std::to_string(i), "100.00 EUR", "-1.00 EUR", "rounding half-even"});
  auto node = table(columns, rows);
  for (auto _ : state) {
    auto text = to_text(node);
    benchmark::DoNotOptimize(text.size());
  }
}
BENCHMARK(BM_RenderWideTableText)->Arg(16)->Arg(256)->Arg(2048);

}  // namespace
