#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace exemplar {

/// Identifier of a registered example: dot-separated segments, each of the
/// form [A-Za-z_][A-Za-z0-9_]*, e.g. "prices.hundredEuros".
class ExampleId {
 public:
  explicit ExampleId(std::string value);

  static bool valid(std::string_view text) noexcept;

  const std::string& str() const noexcept { return value_; }

  auto operator<=>(const ExampleId&) const = default;

 private:
  std::string value_;
};

std::ostream& operator<<(std::ostream& os, const ExampleId& id);

}  // namespace exemplar
