#include "exemplar/registry.hpp"

#include "exemplar/errors.hpp"

namespace exemplar {

void ExampleRegistry::add(ExampleDefinition def) {
  if (contains(def.id())) throw DuplicateIdError(def.id().str());
  auto id = def.id();
  entries_.emplace(std::move(id), std::move(def));
}

bool ExampleRegistry::contains(const ExampleId& id) const noexcept {
  return entries_.find(id) != entries_.end();
}

const ExampleDefinition* ExampleRegistry::find(const ExampleId& id) const noexcept {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace exemplar
