#include "exemplar/demo/prices.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exemplar/errors.hpp"

namespace exemplar::demo {

namespace {

bool valid_currency(const std::string& code) {
  if (code.size() != 3) return false;
  for (char c : code)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

}  // namespace

Money::Money(std::int64_t amount_minor, std::string currency)
    : amount_minor_(amount_minor), currency_(std::move(currency)) {
  if (!valid_currency(currency_))
    throw std::invalid_argument("currency must be three uppercase letters, got \"" +
                                currency_ + "\"");
}

std::string format_money(const Money& m) {
  std::int64_t units = m.amount_minor() / 100;
  std::int64_t cents = m.amount_minor() % 100;
  const char* sign = m.amount_minor() < 0 ? "-" : "";
  if (units < 0) units = -units;
  if (cents < 0) cents = -cents;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%" PRId64 ".%02" PRId64 " %s", sign, units, cents,
                m.currency().c_str());
  return buf;
}

Discount Discount::fixed(Money amount) {
  if (amount.amount_minor() < 0)
    throw std::invalid_argument("fixed discount must be non-negative, got " +
                                format_money(amount));
  return Discount{std::variant<Money, int>(std::move(amount))};
}

Discount Discount::percent(int basis_points) {
  if (basis_points < 0 || basis_points > 10000)
    throw std::invalid_argument("percent discount must be within 0..10000 basis points, got " +
                                std::to_string(basis_points));
  return Discount{std::variant<Money, int>(basis_points)};
}

struct Price::Node {
  // Concrete leaf when discount is absent; otherwise a discounted wrapper.
  std::optional<Money> money;
  std::shared_ptr<const Node> base;
  std::optional<Discount> discount;
};

Price Price::concrete(Money money) {
  auto node = std::make_shared<Node>();
  node->money = std::move(money);
  return Price{std::move(node)};
}

Price Price::discounted(Price base, Discount discount) {
  auto node = std::make_shared<Node>();
  node->base = std::move(base.node_);
  node->discount = std::move(discount);
  return Price{std::move(node)};
}

bool Price::is_concrete() const noexcept { return node_->money.has_value(); }

const Money& Price::money() const { return *node_->money; }

Price Price::base() const { return Price{node_->base}; }

const Discount& Price::discount() const { return *node_->discount; }

bool Price::operator==(const Price& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  while (a && b) {
    if (a == b) return true;
    if (a->money.has_value() != b->money.has_value()) return false;
    if (a->money) return *a->money == *b->money;
    if (!(*a->discount == *b->discount)) return false;
    a = a->base.get();
    b = b->base.get();
  }
  return a == b;
}

Price as_price(const Money& money) { return Price::concrete(money); }

std::string currency_of(const Price& price) {
  Price p = price;
  while (!p.is_concrete()) p = p.base();
  return p.money().currency();
}

Price discounted_by(const Price& price, const Discount& discount) {
  if (discount.is_fixed() && discount.amount().currency() != currency_of(price))
    throw CurrencyMismatchError(currency_of(price), discount.amount().currency());
  return Price::discounted(price, discount);
}

namespace {

/// Rounds amount * (10000 - basis_points) / 10000 to the nearest minor unit,
/// ties to even.
std::int64_t apply_percent(std::int64_t amount, int basis_points) {
  std::int64_t numerator = amount * (10000 - basis_points);
  std::int64_t quotient = numerator / 10000;
  std::int64_t remainder = numerator % 10000;
  if (remainder * 2 > 10000) return quotient + 1;
  if (remainder * 2 < 10000) return quotient;
  return quotient % 2 == 0 ? quotient : quotient + 1;
}

Money apply_discount(const Money& running, const Discount& discount) {
  if (discount.is_fixed()) {
    std::int64_t result = running.amount_minor() - discount.amount().amount_minor();
    if (result < 0)
      throw NegativePriceError("fixed discount " + format_money(discount.amount()) +
                               " exceeds running total " + format_money(running));
    return Money(result, running.currency());
  }
  return Money(apply_percent(running.amount_minor(), discount.basis_points()),
               running.currency());
}

/// The concrete base plus the discounts in application order (innermost first).
struct FlatPrice {
  Money base;
  std::vector<Discount> chain;
};

FlatPrice flatten(const Price& price) {
  std::vector<Discount> chain;
  Price p = price;
  while (!p.is_concrete()) {
    chain.push_back(p.discount());
    p = p.base();
  }
  std::reverse(chain.begin(), chain.end());
  return {p.money(), std::move(chain)};
}

}  // namespace

Money total_value(const Price& price) {
  FlatPrice flat = flatten(price);
  Money running = std::move(flat.base);
  for (const Discount& d : flat.chain) running = apply_discount(running, d);
  return running;
}

RenderNode price_overview(const Price& price) {
  if (price.is_concrete())
    return composite("Price",
                     {text(format_money(price.money())), text("a fixed amount of money")});

  FlatPrice flat = flatten(price);
  Money running = std::move(flat.base);
  std::vector<std::vector<std::string>> rows{{"base", format_money(running)}};
  for (const Discount& d : flat.chain) {
    running = apply_discount(running, d);
    rows.push_back({d.is_fixed() ? "after fixed" : "after percent", format_money(running)});
  }
  return table({"step", "price"}, std::move(rows));
}

namespace {

std::string describe_discount(const Discount& d) {
  if (d.is_fixed()) return "fixed " + format_money(d.amount());
  char buf[32];
  std::snprintf(buf, sizeof buf, "percent %d.%02d%%", d.basis_points() / 100,
                d.basis_points() % 100);
  return buf;
}

}  // namespace

ExampleValue price_value(const Price& price) {
  return make_value<Price>(
      price.is_concrete() ? "ConcretePrice" : "DiscountedPrice", price,
      [](const Price& p) -> FieldList {
        if (p.is_concrete()) return {{"money", format_money(p.money())}};
        return {{"base", format_money(total_value(p.base()))},
                {"discount", describe_discount(p.discount())}};
      });
}

ExampleRegistry price_suite() {
  ExampleRegistry reg;

  reg.add(ExampleDefinition(
      ExampleId("prices.hundredEuros"), {},
      [](std::span<const ExampleValue>) {
        Price p = as_price(Money(10000, "EUR"));
        expect(p == as_price(Money(10000, "EUR")),
               "prices built from the same money compare equal");
        return price_value(p);
      },
      "a concrete price of 100.00 EUR"));

  reg.add(ExampleDefinition(
      ExampleId("prices.discountedFixed"), {ExampleId("prices.hundredEuros")},
      [](std::span<const ExampleValue> deps) {
        const Price& base = value_as<Price>(deps[0]);
        Price p = discounted_by(base, Discount::fixed(Money(2000, "EUR")));
        expect(total_value(p) == Money(8000, "EUR"), "20.00 EUR off 100.00 EUR leaves 80.00 EUR");
        return price_value(p);
      },
      "100.00 EUR minus a fixed 20.00 EUR"));

  reg.add(ExampleDefinition(
      ExampleId("prices.discountedTwice"), {ExampleId("prices.discountedFixed")},
      [](std::span<const ExampleValue> deps) {
        const Price& base = value_as<Price>(deps[0]);
        Price p = discounted_by(base, Discount::percent(1000));
        expect(total_value(p) == Money(7200, "EUR"), "10% off 80.00 EUR leaves 72.00 EUR");
        return price_value(p);
      },
      "the fixed-discounted price minus 10%"));

  reg.add(ExampleDefinition(
      ExampleId("prices.zeroPercentIdentity"), {ExampleId("prices.hundredEuros")},
      [](std::span<const ExampleValue> deps) {
        const Price& base = value_as<Price>(deps[0]);
        Price p = discounted_by(base, Discount::percent(0));
        expect(total_value(p) == total_value(base), "a 0% discount changes nothing");
        return price_value(p);
      },
      "a zero-percent discount keeps the total"));

  return reg;
}

ViewRegistry price_views() {
  ViewRegistry views;
  ViewFn overview = [](const ExampleValue& v) { return price_overview(value_as<Price>(v)); };
  views.register_view("ConcretePrice", ViewId("overview"), overview);
  views.register_view("DiscountedPrice", ViewId("overview"), overview);
  return views;
}

cli::Environment demo_environment() { return {price_suite(), price_views()}; }

}  // namespace exemplar::demo
