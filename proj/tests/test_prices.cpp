#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "exemplar/demo/prices.hpp"
#include "exemplar/errors.hpp"
#include "exemplar/graph.hpp"
#include "exemplar/render.hpp"
#include "exemplar/runner.hpp"
#include "support/price_oracle.hpp"
#include "support/test_suites.hpp"

using namespace exemplar;
using namespace exemplar::demo;

TEST_CASE("money formats as units.cents with its currency") {
  CHECK(format_money(Money(10000, "EUR")) == "100.00 EUR");
  CHECK(format_money(Money(5, "EUR")) == "0.05 EUR");
  CHECK(format_money(Money(120, "USD")) == "1.20 USD");
  CHECK(format_money(Money(0, "JPY")) == "0.00 JPY");
  CHECK(format_money(Money(-5, "EUR")) == "-0.05 EUR");
  CHECK(format_money(Money(-10050, "EUR")) == "-100.50 EUR");

  CHECK_THROWS_AS(Money(1, "eur"), std::invalid_argument);
  CHECK_THROWS_AS(Money(1, "EURO"), std::invalid_argument);
  CHECK_THROWS_AS(Money(1, ""), std::invalid_argument);
}

TEST_CASE("discount factories validate their arguments") {
  auto fixed = Discount::fixed(Money(2000, "EUR"));
  CHECK(fixed.is_fixed());
  CHECK(fixed.amount() == Money(2000, "EUR"));

  auto percent = Discount::percent(1000);
  CHECK_FALSE(percent.is_fixed());
  CHECK(percent.basis_points() == 1000);

  CHECK_NOTHROW(Discount::percent(0));
  CHECK_NOTHROW(Discount::percent(10000));
  CHECK_NOTHROW(Discount::fixed(Money(0, "EUR")));
  CHECK_THROWS_AS(Discount::fixed(Money(-1, "EUR")), std::invalid_argument);
  CHECK_THROWS_AS(Discount::percent(-1), std::invalid_argument);
  CHECK_THROWS_AS(Discount::percent(10001), std::invalid_argument);
}

TEST_CASE("prices are immutable chains with structural equality") {
  Price hundred = as_price(Money(10000, "EUR"));
  CHECK(hundred.is_concrete());
  CHECK(hundred.money() == Money(10000, "EUR"));
  CHECK(currency_of(hundred) == "EUR");

  Price cut = discounted_by(hundred, Discount::fixed(Money(2000, "EUR")));
  CHECK_FALSE(cut.is_concrete());
  CHECK(cut.base() == hundred);
  CHECK(cut.discount() == Discount::fixed(Money(2000, "EUR")));
  CHECK(currency_of(cut) == "EUR");

  // Structurally identical chains built separately compare equal.
  Price again = discounted_by(as_price(Money(10000, "EUR")),
                              Discount::fixed(Money(2000, "EUR")));
  CHECK(cut == again);
  CHECK_FALSE(cut == hundred);
  CHECK_FALSE(cut == discounted_by(hundred, Discount::fixed(Money(2001, "EUR"))));
  CHECK_FALSE(cut == discounted_by(hundred, Discount::percent(2000)));
}

TEST_CASE("fixed discounts must match the price's currency") {
  Price euros = as_price(Money(10000, "EUR"));
  try {
    discounted_by(euros, Discount::fixed(Money(100, "USD")));
    FAIL("expected CurrencyMismatchError");
  } catch (const CurrencyMismatchError& e) {
    CHECK(e.price_currency() == "EUR");
    CHECK(e.discount_currency() == "USD");
  }
  // Percent discounts are currency-free.
  CHECK_NOTHROW(discounted_by(euros, Discount::percent(500)));
  // The check applies to the chain's underlying currency, not just the top.
  Price wrapped = discounted_by(euros, Discount::percent(500));
  CHECK_THROWS_AS(discounted_by(wrapped, Discount::fixed(Money(1, "GBP"))),
                  CurrencyMismatchError);
}

TEST_CASE("totals evaluate the discount chain bottom-up") {
  Price hundred = as_price(Money(10000, "EUR"));
  CHECK(total_value(hundred) == Money(10000, "EUR"));

  Price eighty = discounted_by(hundred, Discount::fixed(Money(2000, "EUR")));
  CHECK(total_value(eighty) == Money(8000, "EUR"));

  Price seventyTwo = discounted_by(eighty, Discount::percent(1000));
  CHECK(total_value(seventyTwo) == Money(7200, "EUR"));

  CHECK(total_value(discounted_by(hundred, Discount::percent(10000))) == Money(0, "EUR"));
  CHECK(total_value(discounted_by(hundred, Discount::percent(0))) == Money(10000, "EUR"));
  CHECK(total_value(discounted_by(hundred, Discount::fixed(Money(0, "EUR")))) ==
        Money(10000, "EUR"));
}

TEST_CASE("percent discounts round half-even per stage") {
  auto after = [](std::int64_t minor, int bp) {
    return total_value(discounted_by(as_price(Money(minor, "EUR")), Discount::percent(bp)))
        .amount_minor();
  };
  CHECK(after(9999, 1000) == 8999);  // 8999.1 rounds down
  CHECK(after(5, 5000) == 2);        // 2.5 ties to even
  CHECK(after(15, 5000) == 8);       // 7.5 ties to even
  CHECK(after(25, 9000) == 2);       // 2.5 again, from the other side
  CHECK(after(35, 5000) == 18);      // 17.5 ties to even
  CHECK(after(1, 2500) == 1);        // 0.75 rounds up
  CHECK(after(1, 7500) == 0);        // 0.25 rounds down
}

TEST_CASE("the order of discounts matters") {
  Price hundred = as_price(Money(10000, "EUR"));
  Price halfThenFixed = discounted_by(discounted_by(hundred, Discount::percent(5000)),
                                      Discount::fixed(Money(3000, "EUR")));
  Price fixedThenHalf = discounted_by(discounted_by(hundred, Discount::fixed(Money(3000, "EUR"))),
                                      Discount::percent(5000));
  CHECK(total_value(halfThenFixed) == Money(2000, "EUR"));
  CHECK(total_value(fixedThenHalf) == Money(3500, "EUR"));
}

TEST_CASE("a fixed discount cannot push the total below zero") {
  Price ten = as_price(Money(1000, "EUR"));
  try {
    total_value(discounted_by(ten, Discount::fixed(Money(2000, "EUR"))));
    FAIL("expected NegativePriceError");
  } catch (const NegativePriceError& e) {
    CHECK(std::string(e.what()) ==
          "fixed discount 20.00 EUR exceeds running total 10.00 EUR");
  }
  // The check runs against the running total, not the original base.
  Price small = discounted_by(as_price(Money(10000, "EUR")), Discount::percent(9900));
  CHECK_THROWS_AS(total_value(discounted_by(small, Discount::fixed(Money(200, "EUR")))),
                  NegativePriceError);
}

TEST_CASE("the overview renders a caption or a step table") {
  Price hundred = as_price(Money(10000, "EUR"));
  CHECK(price_overview(hundred) ==
        composite("Price", {text("100.00 EUR"), text("a fixed amount of money")}));
  CHECK(to_markdown(price_overview(hundred)) ==
        "**Price**\n"
        "\n"
        "100.00 EUR\n"
        "\n"
        "a fixed amount of money");

  Price chain = discounted_by(
      discounted_by(hundred, Discount::fixed(Money(2000, "EUR"))), Discount::percent(1000));
  CHECK(to_markdown(price_overview(chain)) ==
        "| step | price |\n"
        "| --- | --- |\n"
        "| base | 100.00 EUR |\n"
        "| after fixed | 80.00 EUR |\n"
        "| after percent | 72.00 EUR |");
  CHECK(to_text(price_overview(chain)) ==
        "step           price\n"
        "base           100.00 EUR\n"
        "after fixed    80.00 EUR\n"
        "after percent  72.00 EUR");
}

TEST_CASE("price values expose their structure as fields") {
  Price hundred = as_price(Money(10000, "EUR"));
  auto concrete = price_value(hundred);
  CHECK(concrete.type_tag == "ConcretePrice");
  CHECK(concrete.fields() == FieldList{{"money", "100.00 EUR"}});

  Price chain = discounted_by(
      discounted_by(hundred, Discount::fixed(Money(2000, "EUR"))), Discount::percent(1000));
  auto discounted = price_value(chain);
  CHECK(discounted.type_tag == "DiscountedPrice");
  CHECK(discounted.fields() ==
        FieldList{{"base", "80.00 EUR"}, {"discount", "percent 10.00%"}});

  auto fixed_layer = price_value(discounted_by(hundred, Discount::fixed(Money(2000, "EUR"))));
  CHECK(fixed_layer.fields() ==
        FieldList{{"base", "100.00 EUR"}, {"discount", "fixed 20.00 EUR"}});
  CHECK(value_as<Price>(discounted) == chain);
}

TEST_CASE("the demo suite passes end to end") {
  auto graph = build_graph(price_suite());
  CHECK(graph.topo_order() ==
        std::vector<ExampleId>{
            ExampleId("prices.hundredEuros"), ExampleId("prices.discountedFixed"),
            ExampleId("prices.discountedTwice"), ExampleId("prices.zeroPercentIdentity")});

  auto report = run_all(graph);
  CHECK(report.counts.passed == 4);
  CHECK(report.counts.failed == 0);
  CHECK(report.counts.skipped == 0);

  const auto* final_value = report.cache.find(ExampleId("prices.discountedTwice")) !=
                                    report.cache.end()
                                ? &report.cache.at(ExampleId("prices.discountedTwice"))
                                : nullptr;
  REQUIRE(final_value != nullptr);
  CHECK(total_value(value_as<Price>(*final_value)) == Money(7200, "EUR"));
}

TEST_CASE("the demo graph has a stable dot rendering") {
  CHECK(build_graph(price_suite()).to_dot() ==
        "digraph examples {\n"
        "\"prices.discountedFixed\" -> \"prices.discountedTwice\";\n"
        "\"prices.hundredEuros\" -> \"prices.discountedFixed\";\n"
        "\"prices.hundredEuros\" -> \"prices.zeroPercentIdentity\";\n"
        "}\n");
}

TEST_CASE("breaking one link skips its dependents and nothing else") {
  ExampleRegistry rigged;
  auto demo = price_suite();
  for (const auto& [id, def] : demo.entries()) {
    if (id == ExampleId("prices.discountedFixed")) {
      rigged.add(ExampleDefinition(
          id, def.deps(),
          [](std::span<const ExampleValue>) -> ExampleValue {
            expect(false, "rigged to fail");
            return price_value(as_price(Money(0, "EUR")));
          },
          def.description()));
    } else {
      rigged.add(def);
    }
  }

  auto graph = build_graph(rigged);
  auto report = run_all(graph);
  CHECK(report.counts.passed == 2);
  CHECK(report.counts.failed == 1);
  CHECK(report.counts.skipped == 1);
  CHECK(is_failed(report.statuses.at(ExampleId("prices.discountedFixed"))));
  CHECK(std::get<Skipped>(report.statuses.at(ExampleId("prices.discountedTwice"))).blocked_by ==
        ExampleId("prices.discountedFixed"));
  CHECK(is_passed(report.statuses.at(ExampleId("prices.zeroPercentIdentity"))));
  CHECK(root_causes(report) == std::set<ExampleId>{ExampleId("prices.discountedFixed")});
}

TEST_CASE("the demo views cover both price type tags") {
  auto views = price_views();
  CHECK(views.available_views("ConcretePrice") ==
        std::vector<ViewId>{ViewId::raw(), ViewId("overview")});
  CHECK(views.available_views("DiscountedPrice") ==
        std::vector<ViewId>{ViewId::raw(), ViewId("overview")});

  auto value = price_value(as_price(Money(10000, "EUR")));
  CHECK(views.render(value, ViewId("overview")) ==
        composite("Price", {text("100.00 EUR"), text("a fixed amount of money")}));
  CHECK(views.render(value, ViewId::raw()) ==
        composite("ConcretePrice", {key_value({{"money", "100.00 EUR"}})}));

  auto env = demo_environment();
  CHECK(env.examples.size() == 4);
  CHECK(env.views.find("ConcretePrice", ViewId("overview")) != nullptr);
}

TEST_CASE("random discount chains agree with exact rational arithmetic") {
  std::mt19937 rng(101);
  int negatives = 0;
  for (int round = 0; round < 500; ++round) {
    auto sample = testsupport::random_price(rng);
    auto expected = testsupport::oracle_total(sample.base_minor, sample.stages);
    if (expected) {
      Money got = total_value(sample.price);
      CHECK(got.amount_minor() == *expected);
      CHECK(got.currency() == "EUR");
    } else {
      ++negatives;
      CHECK_THROWS_AS(total_value(sample.price), NegativePriceError);
    }
  }
  CHECK(negatives > 0);  // the generator does explore the error path
}

TEST_CASE("identity discounts never change a total") {
  std::mt19937 rng(103);
  for (int round = 0; round < 100; ++round) {
    auto sample = testsupport::random_price(rng);
    auto expected = testsupport::oracle_total(sample.base_minor, sample.stages);
    if (!expected) continue;
    CHECK(total_value(discounted_by(sample.price, Discount::percent(0))).amount_minor() ==
          *expected);
    CHECK(total_value(discounted_by(sample.price, Discount::fixed(Money(0, "EUR"))))
              .amount_minor() == *expected);
    CHECK(total_value(discounted_by(sample.price, Discount::percent(10000))).amount_minor() ==
          0);
  }
}
