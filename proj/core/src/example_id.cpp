#include "exemplar/example_id.hpp"

#include <ostream>

#include "exemplar/errors.hpp"

namespace exemplar {

namespace {

bool segment_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool segment_char(char c) {
  return segment_start(c) || (c >= '0' && c <= '9');
}

}  // namespace

bool ExampleId::valid(std::string_view text) noexcept {
  if (text.empty()) return false;
  bool at_start = true;
  for (char c : text) {
    if (at_start) {
      if (!segment_start(c)) return false;
      at_start = false;
    } else if (c == '.') {
      at_start = true;
    } else if (!segment_char(c)) {
      return false;
    }
  }
  return !at_start;  // no trailing dot
}

ExampleId::ExampleId(std::string value) : value_(std::move(value)) {
  if (!valid(value_))
    throw InvalidIdError(value_, "expected dot-separated segments of [A-Za-z_][A-Za-z0-9_]*");
}

std::ostream& operator<<(std::ostream& os, const ExampleId& id) { return os << id.str(); }

}  // namespace exemplar
