#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exemplar/definition.hpp"
#include "exemplar/example_id.hpp"
#include "exemplar/registry.hpp"

namespace exemplar {

class ExampleGraph;

/// Validates the registry and freezes it into an immutable dependency graph.
/// Throws UnknownDependencyError or CycleError.
ExampleGraph build_graph(const ExampleRegistry& registry);

/// Acyclic dependency graph over registered examples. Edges run from a
/// dependency to its dependent.
class ExampleGraph {
 public:
  const std::set<ExampleId>& nodes() const noexcept { return nodes_; }
  const std::set<std::pair<ExampleId, ExampleId>>& edges() const noexcept { return edges_; }
  bool contains(const ExampleId& id) const noexcept { return nodes_.count(id) != 0; }

  const ExampleDefinition& definition(const ExampleId& id) const;
  const std::vector<ExampleId>& deps(const ExampleId& id) const;
  const std::vector<ExampleId>& dependents(const ExampleId& id) const;  // sorted

  /// Dependencies before dependents; ties broken by lexicographic id order.
  const std::vector<ExampleId>& topo_order() const noexcept { return topo_; }
  std::size_t topo_index(const ExampleId& id) const;

  /// All nodes reachable along dependent edges, excluding id itself.
  std::set<ExampleId> transitive_dependents(const ExampleId& id) const;
  /// All nodes reachable along dependency edges, excluding id itself.
  std::set<ExampleId> ancestors(const ExampleId& id) const;

  /// GraphViz text: one line per edge sorted by (dep, dependent), then one
  /// line per isolated node. Stable byte-for-byte across runs.
  std::string to_dot() const;

 private:
  friend ExampleGraph build_graph(const ExampleRegistry&);
  ExampleGraph() = default;

  std::map<ExampleId, ExampleDefinition> defs_;
  std::set<ExampleId> nodes_;
  std::set<std::pair<ExampleId, ExampleId>> edges_;
  std::map<ExampleId, std::vector<ExampleId>> deps_;
  std::map<ExampleId, std::vector<ExampleId>> dependents_;
  std::vector<ExampleId> topo_;
  std::map<ExampleId, std::size_t> topo_index_;
};

}  // namespace exemplar
