#include "exemplar/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "exemplar/errors.hpp"

namespace exemplar {

namespace {

void detect_cycle(const std::map<ExampleId, std::vector<ExampleId>>& deps) {
  enum class Color { White, Gray, Black };
  std::map<ExampleId, Color> color;
  for (const auto& [id, _] : deps) color.emplace(id, Color::White);

  std::vector<ExampleId> stack;
  std::function<void(const ExampleId&)> visit = [&](const ExampleId& u) {
    color[u] = Color::Gray;
    stack.push_back(u);
    for (const auto& d : deps.at(u)) {
      if (color[d] == Color::Gray) {
        auto it = std::find(stack.begin(), stack.end(), d);
        std::vector<std::string> path;
        for (; it != stack.end(); ++it) path.push_back(it->str());
        path.push_back(d.str());
        throw CycleError(std::move(path));
      }
      if (color[d] == Color::White) visit(d);
    }
    stack.pop_back();
    color[u] = Color::Black;
  };
  for (const auto& [id, _] : deps)
    if (color[id] == Color::White) visit(id);
}

}  // namespace

ExampleGraph build_graph(const ExampleRegistry& registry) {
  ExampleGraph g;
  g.defs_ = registry.entries();
  for (const auto& [id, def] : g.defs_) {
    g.nodes_.insert(id);
    g.deps_.emplace(id, def.deps());
    g.dependents_.emplace(id, std::vector<ExampleId>{});
  }
  for (const auto& [id, def] : g.defs_) {
    for (const auto& dep : def.deps()) {
      if (!registry.contains(dep)) throw UnknownDependencyError(id.str(), dep.str());
      g.edges_.emplace(dep, id);
      g.dependents_.at(dep).push_back(id);
    }
  }
  for (auto& [_, dependents] : g.dependents_) std::sort(dependents.begin(), dependents.end());

  detect_cycle(g.deps_);

  // Kahn's algorithm; the min-heap makes ties lexicographic.
  std::map<ExampleId, std::size_t> pending;
  std::priority_queue<ExampleId, std::vector<ExampleId>, std::greater<>> ready;
  for (const auto& id : g.nodes_) {
    pending[id] = g.deps_.at(id).size();
    if (pending[id] == 0) ready.push(id);
  }
  while (!ready.empty()) {
    ExampleId id = ready.top();
    ready.pop();
    g.topo_index_.emplace(id, g.topo_.size());
    g.topo_.push_back(id);
    for (const auto& dependent : g.dependents_.at(id))
      if (--pending.at(dependent) == 0) ready.push(dependent);
  }
  return g;
}

const ExampleDefinition& ExampleGraph::definition(const ExampleId& id) const {
  auto it = defs_.find(id);
  if (it == defs_.end()) throw UnknownIdError(id.str());
  return it->second;
}

const std::vector<ExampleId>& ExampleGraph::deps(const ExampleId& id) const {
  auto it = deps_.find(id);
  if (it == deps_.end()) throw UnknownIdError(id.str());
  return it->second;
}

const std::vector<ExampleId>& ExampleGraph::dependents(const ExampleId& id) const {
  auto it = dependents_.find(id);
  if (it == dependents_.end()) throw UnknownIdError(id.str());
  return it->second;
}

std::size_t ExampleGraph::topo_index(const ExampleId& id) const {
  auto it = topo_index_.find(id);
  if (it == topo_index_.end()) throw UnknownIdError(id.str());
  return it->second;
}

std::set<ExampleId> ExampleGraph::transitive_dependents(const ExampleId& id) const {
  std::set<ExampleId> out;
  std::vector<ExampleId> frontier{id};
  if (!contains(id)) throw UnknownIdError(id.str());
  while (!frontier.empty()) {
    ExampleId u = frontier.back();
    frontier.pop_back();
    for (const auto& v : dependents_.at(u))
      if (out.insert(v).second) frontier.push_back(v);
  }
  return out;
}

std::set<ExampleId> ExampleGraph::ancestors(const ExampleId& id) const {
  std::set<ExampleId> out;
  std::vector<ExampleId> frontier{id};
  if (!contains(id)) throw UnknownIdError(id.str());
  while (!frontier.empty()) {
    ExampleId u = frontier.back();
    frontier.pop_back();
    for (const auto& v : deps_.at(u))
      if (out.insert(v).second) frontier.push_back(v);
  }
  return out;
}

std::string ExampleGraph::to_dot() const {
  std::string out = "digraph examples {\n";
  for (const auto& [dep, dependent] : edges_)
    out += "\"" + dep.str() + "\" -> \"" + dependent.str() + "\";\n";
  for (const auto& id : nodes_)
    if (deps_.at(id).empty() && dependents_.at(id).empty()) out += "\"" + id.str() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace exemplar
