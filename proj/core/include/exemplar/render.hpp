#pragma once

#include <string>
#include <variant>
#include <vector>

#include "exemplar/value.hpp"

namespace exemplar {

struct RenderNode;

struct TextNode {
  std::string content;
  bool operator==(const TextNode&) const = default;
};

struct KeyValueNode {
  FieldList pairs;
  bool operator==(const KeyValueNode&) const = default;
};

struct TableNode {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // every row as wide as columns
  bool operator==(const TableNode&) const = default;
};

struct ListNode {
  std::vector<RenderNode> items;
  bool operator==(const ListNode&) const = default;
};

struct CompositeNode {
  std::string label;
  std::vector<RenderNode> children;
  bool operator==(const CompositeNode&) const = default;
};

struct RenderNode {
  std::variant<TextNode, KeyValueNode, TableNode, ListNode, CompositeNode> node;
  bool operator==(const RenderNode&) const = default;
};

RenderNode text(std::string content);
RenderNode key_value(FieldList pairs);
/// Throws std::invalid_argument when a row's width differs from the header's.
RenderNode table(std::vector<std::string> columns, std::vector<std::vector<std::string>> rows);
RenderNode list(std::vector<RenderNode> items);
RenderNode composite(std::string label, std::vector<RenderNode> children);

/// Deterministic markdown: key/values as "- **key:** value" bullets, tables
/// as pipe tables, composites as a "**label**" line followed by children,
/// siblings separated by blank lines.
std::string to_markdown(const RenderNode& node);

/// Same layout without markup; tables become width-aligned columns.
std::string to_text(const RenderNode& node);

}  // namespace exemplar
