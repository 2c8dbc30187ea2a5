#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "exemplar/cli.hpp"
#include "exemplar/registry.hpp"
#include "exemplar/render.hpp"
#include "exemplar/value.hpp"
#include "exemplar/views.hpp"

namespace exemplar::demo {

/// An amount in minor units (cents) of an ISO-like three-letter currency.
class Money {
 public:
  Money(std::int64_t amount_minor, std::string currency);

  std::int64_t amount_minor() const noexcept { return amount_minor_; }
  const std::string& currency() const noexcept { return currency_; }

  bool operator==(const Money&) const = default;

 private:
  std::int64_t amount_minor_;
  std::string currency_;
};

/// "100.00 EUR"
std::string format_money(const Money& m);

class Discount {
 public:
  static Discount fixed(Money amount);           // amount must be non-negative
  static Discount percent(int basis_points);     // 0..10000

  bool is_fixed() const noexcept { return std::holds_alternative<Money>(v_); }
  const Money& amount() const { return std::get<Money>(v_); }
  int basis_points() const { return std::get<int>(v_); }

  bool operator==(const Discount&) const = default;

 private:
  explicit Discount(std::variant<Money, int> v) : v_(std::move(v)) {}
  std::variant<Money, int> v_;
};

/// A concrete amount of money, or another price wrapped by a discount.
/// Immutable; equality is structural.
class Price {
 public:
  static Price concrete(Money money);
  static Price discounted(Price base, Discount discount);

  bool is_concrete() const noexcept;
  const Money& money() const;        // concrete prices only
  Price base() const;                // discounted prices only
  const Discount& discount() const;  // discounted prices only

  bool operator==(const Price& other) const;

 private:
  struct Node;
  explicit Price(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Price as_price(const Money& money);

/// Currency of the concrete price at the bottom of the discount chain.
std::string currency_of(const Price& price);

/// Wraps price in one more discount. A fixed discount must match the price's
/// currency (CurrencyMismatchError).
Price discounted_by(const Price& price, const Discount& discount);

/// Evaluates the discount chain bottom-up. Fixed discounts subtract exactly
/// and must not push the running total negative (NegativePriceError); percent
/// discounts keep basis_points/10000 off and round half-even to minor units.
Money total_value(const Price& price);

/// Overview view: a concrete price renders as its amount plus a caption; a
/// discounted price as a step/price table from the base down to the total.
RenderNode price_overview(const Price& price);

/// Wraps a price as an example value tagged "ConcretePrice"/"DiscountedPrice".
ExampleValue price_value(const Price& price);

/// The built-in demo suite: a concrete 100.00 EUR price, a fixed discount on
/// it, a percentage on top of that, and a zero-percent identity check.
ExampleRegistry price_suite();

/// "overview" for both price type tags.
ViewRegistry price_views();

/// price_suite + price_views, ready for the command line.
cli::Environment demo_environment();

}  // namespace exemplar::demo
