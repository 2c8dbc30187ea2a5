#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exemplar {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class InvalidIdError : public Error {
 public:
  InvalidIdError(std::string text, const std::string& reason)
      : Error("invalid id \"" + text + "\": " + reason), text_(std::move(text)) {}
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
};

class InvalidDefinitionError : public Error {
 public:
  explicit InvalidDefinitionError(const std::string& message) : Error(message) {}
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(std::string id)
      : Error("example \"" + id + "\" is already registered"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnknownDependencyError : public Error {
 public:
  UnknownDependencyError(std::string id, std::string missing)
      : Error("example \"" + id + "\" depends on unknown example \"" + missing + "\""),
        id_(std::move(id)),
        missing_(std::move(missing)) {}
  const std::string& id() const noexcept { return id_; }
  const std::string& missing() const noexcept { return missing_; }

 private:
  std::string id_;
  std::string missing_;
};

class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> path)
      : Error("dependency cycle: " + join(path)), path_(std::move(path)) {}
  /// The cycle in depends-on order; first and last entries are the same node.
  const std::vector<std::string>& path() const noexcept { return path_; }

 private:
  static std::string join(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& p : path) {
      if (!out.empty()) out += " -> ";
      out += p;
    }
    return out;
  }
  std::vector<std::string> path_;
};

class UnknownIdError : public Error {
 public:
  explicit UnknownIdError(std::string id)
      : Error("no example named \"" + id + "\""), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class FilterError : public Error {
 public:
  FilterError(std::string pattern, const std::string& reason)
      : Error("bad filter \"" + pattern + "\": " + reason), pattern_(std::move(pattern)) {}
  const std::string& pattern() const noexcept { return pattern_; }

 private:
  std::string pattern_;
};

/// Thrown by example producers to signal a failed expectation; everything
/// else escaping a producer is reported as a setup failure.
class AssertionError : public Error {
 public:
  explicit AssertionError(const std::string& message) : Error(message) {}
};

/// Fails the current example when the condition does not hold.
inline void expect(bool condition, const std::string& message) {
  if (!condition) throw AssertionError(message);
}

class ReservedViewIdError : public Error {
 public:
  explicit ReservedViewIdError(std::string view)
      : Error("view id \"" + view + "\" is reserved"), view_(std::move(view)) {}
  const std::string& view() const noexcept { return view_; }

 private:
  std::string view_;
};

class UnknownViewError : public Error {
 public:
  UnknownViewError(std::string type_tag, std::string view)
      : Error("no view \"" + view + "\" registered for type \"" + type_tag + "\""),
        type_tag_(std::move(type_tag)),
        view_(std::move(view)) {}
  const std::string& type_tag() const noexcept { return type_tag_; }
  const std::string& view() const noexcept { return view_; }

 private:
  std::string type_tag_;
  std::string view_;
};

class MalformedDirectiveError : public Error {
 public:
  MalformedDirectiveError(int line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}
  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  std::string reason_;
};

class CurrencyMismatchError : public Error {
 public:
  CurrencyMismatchError(std::string price_currency, std::string discount_currency)
      : Error("cannot discount a " + price_currency + " price by " + discount_currency),
        price_currency_(std::move(price_currency)),
        discount_currency_(std::move(discount_currency)) {}
  const std::string& price_currency() const noexcept { return price_currency_; }
  const std::string& discount_currency() const noexcept { return discount_currency_; }

 private:
  std::string price_currency_;
  std::string discount_currency_;
};

class NegativePriceError : public Error {
 public:
  explicit NegativePriceError(const std::string& message) : Error(message) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(message) {}
};

}  // namespace exemplar
