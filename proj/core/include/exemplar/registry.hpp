#pragma once

#include <cstddef>
#include <map>

#include "exemplar/definition.hpp"
#include "exemplar/example_id.hpp"

namespace exemplar {

/// Collects example definitions prior to graph construction. At most one
/// definition per id; dependency references are resolved by build_graph.
class ExampleRegistry {
 public:
  /// Throws DuplicateIdError; the registry is unchanged on failure.
  void add(ExampleDefinition def);

  bool contains(const ExampleId& id) const noexcept;
  const ExampleDefinition* find(const ExampleId& id) const noexcept;
  const std::map<ExampleId, ExampleDefinition>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<ExampleId, ExampleDefinition> entries_;
};

}  // namespace exemplar
