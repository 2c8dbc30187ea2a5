#include "exemplar/definition.hpp"

#include <algorithm>

#include "exemplar/errors.hpp"

namespace exemplar {

ExampleDefinition::ExampleDefinition(ExampleId id, std::vector<ExampleId> deps,
                                     Producer producer, std::string description)
    : id_(std::move(id)),
      deps_(std::move(deps)),
      producer_(std::move(producer)),
      description_(std::move(description)) {
  if (!producer_)
    throw InvalidDefinitionError("example \"" + id_.str() + "\" has no producer");
  for (std::size_t i = 0; i < deps_.size(); ++i) {
    if (deps_[i] == id_)
      throw InvalidDefinitionError("example \"" + id_.str() + "\" depends on itself");
    for (std::size_t j = i + 1; j < deps_.size(); ++j)
      if (deps_[i] == deps_[j])
        throw InvalidDefinitionError("example \"" + id_.str() +
                                     "\" lists dependency \"" + deps_[i].str() + "\" twice");
  }
}

}  // namespace exemplar
