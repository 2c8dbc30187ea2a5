#include "exemplar/docbook.hpp"

#include <optional>

#include "exemplar/errors.hpp"

namespace exemplar {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (b < e && blank(s[b])) ++b;
  while (e > b && blank(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool is_fence_close(std::string_view content) {
  std::string t = trim(content);
  if (t.size() < 3) return false;
  for (char c : t)
    if (c != '`') return false;
  return true;
}

/// Splits text into lines, keeping each line's terminator attached.
struct LineReader {
  const std::string& text;
  std::size_t pos = 0;
  int line_no = 0;

  bool next(std::string& raw, std::string& content) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) {
      raw = text.substr(pos);
      content = raw;
      pos = text.size();
    } else {
      raw = text.substr(pos, end - pos + 1);
      content = text.substr(pos, end - pos);
      pos = end + 1;
    }
    ++line_no;
    return true;
  }
};

}  // namespace

std::string Document::source_text() const {
  std::string out;
  for (const auto& block : blocks) {
    if (const auto* prose = std::get_if<ProseBlock>(&block)) out += prose->text;
    else out += std::get<EmbedBlock>(block).source;
  }
  return out;
}

Document parse_document(const std::string& text) {
  Document doc;
  std::string prose;
  LineReader reader{text};
  std::string raw, content;

  auto flush_prose = [&] {
    if (!prose.empty()) {
      doc.blocks.push_back(ProseBlock{std::move(prose)});
      prose.clear();
    }
  };

  bool in_plain_fence = false;
  while (reader.next(raw, content)) {
    if (in_plain_fence) {
      prose += raw;
      if (is_fence_close(content)) in_plain_fence = false;
      continue;
    }
    if (content.rfind("```", 0) != 0) {
      prose += raw;
      continue;
    }
    if (trim(content.substr(3)) != "example") {
      prose += raw;
      in_plain_fence = true;
      continue;
    }

    // Example directive: collect body lines up to the closing fence.
    int open_line = reader.line_no;
    std::string source = raw;
    std::optional<ExampleId> id;
    std::optional<ViewId> view;
    bool closed = false;
    while (reader.next(raw, content)) {
      source += raw;
      if (is_fence_close(content)) {
        closed = true;
        break;
      }
      std::string line = trim(content);
      if (line.empty()) continue;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw MalformedDirectiveError(reader.line_no, "expected 'key: value' in directive body");
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "id") {
        if (id) throw MalformedDirectiveError(reader.line_no, "duplicate key \"id\"");
        if (!ExampleId::valid(value))
          throw MalformedDirectiveError(reader.line_no, "bad example id \"" + value + "\"");
        id.emplace(value);
      } else if (key == "view") {
        if (view) throw MalformedDirectiveError(reader.line_no, "duplicate key \"view\"");
        if (!ViewId::valid(value))
          throw MalformedDirectiveError(reader.line_no, "bad view id \"" + value + "\"");
        view.emplace(value);
      } else {
        throw MalformedDirectiveError(reader.line_no, "unknown key \"" + key + "\"");
      }
    }
    if (!closed) throw MalformedDirectiveError(open_line, "unterminated example directive");
    if (!id) throw MalformedDirectiveError(open_line, "missing id");

    flush_prose();
    doc.blocks.push_back(
        EmbedBlock{{*id, view.value_or(ViewId::raw())}, open_line, std::move(source)});
  }
  flush_prose();
  return doc;
}

namespace {

std::string describe_failure(const Failed& f) {
  return std::string("failed (") +
         (f.phase == FailurePhase::Assertion ? "assertion" : "setup") + "): " + f.message;
}

}  // namespace

BuiltDocument build_document(const Document& doc, const ExampleGraph& graph,
                             const ViewRegistry& views, const RunPolicy& policy) {
  RunSession session(graph, policy);
  BuiltDocument out;

  for (std::size_t index = 0; index < doc.blocks.size(); ++index) {
    const auto* embed = std::get_if<EmbedBlock>(&doc.blocks[index]);
    if (!embed) {
      out.text += std::get<ProseBlock>(doc.blocks[index]).text;
      continue;
    }

    const ExampleId& id = embed->directive.example_id;
    const ViewId& view = embed->directive.view_id;
    const bool trailing_nl = !embed->source.empty() && embed->source.back() == '\n';

    std::string kind;
    std::string detail;
    std::string rendered;
    if (!graph.contains(id)) {
      kind = "missing";
      detail = "no such example: " + id.str();
    } else {
      const ExampleStatus& status = session.run_to(id);
      if (const auto* failed = std::get_if<Failed>(&status)) {
        kind = "failed";
        detail = describe_failure(*failed);
      } else if (const auto* skipped = std::get_if<Skipped>(&status)) {
        kind = "skipped";
        detail = "skipped: blocked by " + skipped->blocked_by.str();
      } else {
        const ExampleValue& value = *session.value_of(id);
        if (view != ViewId::raw() && !views.find(value.type_tag, view)) {
          kind = "unknown-view";
          detail = "no such view: " + view.str() + " for type " + value.type_tag;
        } else {
          rendered = to_markdown(views.render(value, view));
        }
      }
    }

    if (kind.empty()) {
      out.text += "<!-- example: " + id.str() + " view: " + view.str() + " status: passed -->\n";
      out.text += rendered;
      if (trailing_nl) out.text += "\n";
    } else {
      out.text += "<!-- example: " + id.str() + " status: " + kind + " -->\n";
      out.text += "> " + detail;
      if (trailing_nl) out.text += "\n";
      out.issues.push_back(DocIssue{static_cast<int>(index), kind, detail});
    }
  }
  return out;
}

std::vector<DocIssue> check_document(const Document& doc, const ExampleGraph& graph,
                                     const ViewRegistry& views, const RunPolicy& policy) {
  return build_document(doc, graph, views, policy).issues;
}

}  // namespace exemplar
