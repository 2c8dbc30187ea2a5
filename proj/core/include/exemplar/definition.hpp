#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "exemplar/example_id.hpp"
#include "exemplar/value.hpp"

namespace exemplar {

/// Runs an example. Receives the values of the declared dependencies in
/// declaration order and returns the example's own value. Throwing
/// AssertionError fails the example's assertion phase; any other exception is
/// reported as a setup failure.
using Producer = std::function<ExampleValue(std::span<const ExampleValue>)>;

class ExampleDefinition {
 public:
  ExampleDefinition(ExampleId id, std::vector<ExampleId> deps, Producer producer,
                    std::string description = "");

  const ExampleId& id() const noexcept { return id_; }
  const std::vector<ExampleId>& deps() const noexcept { return deps_; }
  const Producer& producer() const noexcept { return producer_; }
  const std::string& description() const noexcept { return description_; }

 private:
  ExampleId id_;
  std::vector<ExampleId> deps_;  // ordered, no duplicates, never contains id_
  Producer producer_;
  std::string description_;
};

}  // namespace exemplar
