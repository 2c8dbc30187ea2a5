#pragma once

#include <any>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "exemplar/errors.hpp"

namespace exemplar {

/// Ordered (field name, displayable text) pairs describing a value's shape.
using FieldList = std::vector<std::pair<std::string, std::string>>;

using StructureFn = std::function<FieldList(const std::any&)>;
using DuplicateFn = std::function<std::any(const std::any&)>;

/// A value produced by an example: an opaque payload plus enough metadata to
/// display it (structure) and, optionally, to copy it (duplicate). Values are
/// treated as immutable by convention; under FRESH sharing the runner hands
/// each dependent an independent copy instead of relying on that convention.
struct ExampleValue {
  std::string type_tag;
  std::any payload;
  StructureFn structure;  // pure: equal payloads yield equal field lists
  DuplicateFn duplicate;  // may be empty; the runner then re-runs producers

  FieldList fields() const { return structure ? structure(payload) : FieldList{}; }
};

/// Builds an ExampleValue around a typed payload, wrapping the typed
/// callbacks in the std::any plumbing. T must be given explicitly.
template <typename T>
ExampleValue make_value(std::string type_tag, T payload,
                        std::function<FieldList(const T&)> structure,
                        std::function<T(const T&)> duplicate = {}) {
  if (type_tag.empty()) throw InvalidDefinitionError("value type tag must not be empty");
  ExampleValue v;
  v.type_tag = std::move(type_tag);
  v.payload = std::move(payload);
  if (structure)
    v.structure = [structure](const std::any& a) { return structure(std::any_cast<const T&>(a)); };
  if (duplicate)
    v.duplicate = [duplicate](const std::any& a) {
      return std::any(duplicate(std::any_cast<const T&>(a)));
    };
  return v;
}

/// Typed access to a value's payload; throws std::bad_any_cast on mismatch.
template <typename T>
const T& value_as(const ExampleValue& v) {
  return std::any_cast<const T&>(v.payload);
}

}  // namespace exemplar
