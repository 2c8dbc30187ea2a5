#include "exemplar/views.hpp"

#include "exemplar/errors.hpp"

namespace exemplar {

bool ViewId::valid(std::string_view text) noexcept {
  if (text.empty()) return false;
  if (!((text[0] >= 'a' && text[0] <= 'z') || text[0] == '_')) return false;
  for (char c : text)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

ViewId::ViewId(std::string value) : value_(std::move(value)) {
  if (!valid(value_)) throw InvalidIdError(value_, "expected a lowercase identifier");
}

const ViewId& ViewId::raw() {
  static const ViewId id{"raw"};
  return id;
}

void ViewRegistry::register_view(std::string type_tag, ViewId view, ViewFn fn) {
  if (view == ViewId::raw()) throw ReservedViewIdError(view.str());
  views_.insert_or_assign({std::move(type_tag), view.str()}, std::move(fn));
}

std::vector<ViewId> ViewRegistry::available_views(const std::string& type_tag) const {
  std::vector<ViewId> out{ViewId::raw()};
  // Map order sorts by (tag, view), so the slice for one tag is sorted.
  for (auto it = views_.lower_bound({type_tag, ""});
       it != views_.end() && it->first.first == type_tag; ++it)
    out.emplace_back(it->first.second);
  return out;
}

const ViewFn* ViewRegistry::find(const std::string& type_tag, const ViewId& view) const noexcept {
  auto it = views_.find({type_tag, view.str()});
  return it == views_.end() ? nullptr : &it->second;
}

RenderNode ViewRegistry::render(const ExampleValue& value, const ViewId& view) const {
  if (view == ViewId::raw())
    return composite(value.type_tag, {key_value(value.fields())});
  const ViewFn* fn = find(value.type_tag, view);
  if (!fn) throw UnknownViewError(value.type_tag, view.str());
  return (*fn)(value);
}

}  // namespace exemplar
