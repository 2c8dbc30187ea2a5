#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exemplar/render.hpp"
#include "exemplar/value.hpp"

namespace exemplar {

/// Name of a moldable view: a lowercase identifier. "raw" is reserved for the
/// synthesized structure view every value supports.
class ViewId {
 public:
  explicit ViewId(std::string value);

  static bool valid(std::string_view text) noexcept;
  static const ViewId& raw();

  const std::string& str() const noexcept { return value_; }

  auto operator<=>(const ViewId&) const = default;

 private:
  std::string value_;
};

using ViewFn = std::function<RenderNode(const ExampleValue&)>;

/// Pure rendering functions keyed by (type tag, view id). Rendering never
/// executes examples; it only shapes already-produced values.
class ViewRegistry {
 public:
  /// Re-registering a key replaces the previous function. Registering "raw"
  /// throws ReservedViewIdError.
  void register_view(std::string type_tag, ViewId view, ViewFn fn);

  /// "raw" first, then registered views for the tag in lexicographic order.
  std::vector<ViewId> available_views(const std::string& type_tag) const;

  const ViewFn* find(const std::string& type_tag, const ViewId& view) const noexcept;

  /// Renders value with the named view; "raw" works for every value and shows
  /// its structure fields under a composite labeled with the type tag.
  /// Throws UnknownViewError.
  RenderNode render(const ExampleValue& value, const ViewId& view) const;

 private:
  std::map<std::pair<std::string, std::string>, ViewFn> views_;
};

}  // namespace exemplar
