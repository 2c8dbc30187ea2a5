#include "exemplar/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace exemplar {

RenderNode text(std::string content) { return {TextNode{std::move(content)}}; }

RenderNode key_value(FieldList pairs) { return {KeyValueNode{std::move(pairs)}}; }

RenderNode table(std::vector<std::string> columns, std::vector<std::vector<std::string>> rows) {
  for (const auto& row : rows)
    if (row.size() != columns.size())
      throw std::invalid_argument("table row width " + std::to_string(row.size()) +
                                  " does not match " + std::to_string(columns.size()) +
                                  " columns");
  return {TableNode{std::move(columns), std::move(rows)}};
}

RenderNode list(std::vector<RenderNode> items) { return {ListNode{std::move(items)}}; }

RenderNode composite(std::string label, std::vector<RenderNode> children) {
  return {CompositeNode{std::move(label), std::move(children)}};
}

namespace {

std::string join_blocks(const std::vector<std::string>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += "\n\n";
    out += b;
  }
  return out;
}

struct MarkdownRenderer {
  std::string operator()(const TextNode& n) const { return n.content; }

  std::string operator()(const KeyValueNode& n) const {
    std::string out;
    for (const auto& [key, value] : n.pairs) {
      if (!out.empty()) out += "\n";
      out += "- **" + key + ":** " + value;
    }
    return out;
  }

  std::string operator()(const TableNode& n) const {
    auto row_line = [](const std::vector<std::string>& cells) {
      std::string line = "|";
      for (const auto& c : cells) line += " " + c + " |";
      return line;
    };
    std::string out = row_line(n.columns);
    out += "\n|";
    for (std::size_t i = 0; i < n.columns.size(); ++i) out += " --- |";
    for (const auto& row : n.rows) out += "\n" + row_line(row);
    return out;
  }

  std::string operator()(const ListNode& n) const {
    std::vector<std::string> blocks;
    for (const auto& item : n.items) blocks.push_back(std::visit(*this, item.node));
    return join_blocks(blocks);
  }

  std::string operator()(const CompositeNode& n) const {
    std::vector<std::string> blocks{"**" + n.label + "**"};
    for (const auto& child : n.children) blocks.push_back(std::visit(*this, child.node));
    return join_blocks(blocks);
  }
};

struct TextRenderer {
  std::string operator()(const TextNode& n) const { return n.content; }

  std::string operator()(const KeyValueNode& n) const {
    std::string out;
    for (const auto& [key, value] : n.pairs) {
      if (!out.empty()) out += "\n";
      out += key + ": " + value;
    }
    return out;
  }

  std::string operator()(const TableNode& n) const {
    std::vector<std::size_t> widths(n.columns.size(), 0);
    for (std::size_t i = 0; i < n.columns.size(); ++i) widths[i] = n.columns[i].size();
    for (const auto& row : n.rows)
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

    auto row_line = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        line += cells[i];
        if (i + 1 < cells.size()) line += std::string(widths[i] - cells[i].size() + 2, ' ');
      }
      return line;
    };
    std::string out = row_line(n.columns);
    for (const auto& row : n.rows) out += "\n" + row_line(row);
    return out;
  }

  std::string operator()(const ListNode& n) const {
    std::vector<std::string> blocks;
    for (const auto& item : n.items) blocks.push_back(std::visit(*this, item.node));
    return join_blocks(blocks);
  }

  std::string operator()(const CompositeNode& n) const {
    std::vector<std::string> blocks{n.label};
    for (const auto& child : n.children) blocks.push_back(std::visit(*this, child.node));
    return join_blocks(blocks);
  }
};

}  // namespace

std::string to_markdown(const RenderNode& node) { return std::visit(MarkdownRenderer{}, node.node); }

std::string to_text(const RenderNode& node) { return std::visit(TextRenderer{}, node.node); }

}  // namespace exemplar
