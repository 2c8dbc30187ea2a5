#pragma once

#include <string>
#include <variant>
#include <vector>

#include "exemplar/example_id.hpp"
#include "exemplar/graph.hpp"
#include "exemplar/runner.hpp"
#include "exemplar/views.hpp"

namespace exemplar {

/// One embedded-example request from a page: which example to run and which
/// view to render it with.
struct EmbedDirective {
  ExampleId example_id;
  ViewId view_id;
};

struct ProseBlock {
  std::string text;  // verbatim slice of the source, newlines included
};

struct EmbedBlock {
  EmbedDirective directive;
  int source_line = 0;  // 1-based line of the opening fence
  std::string source;   // verbatim fenced block, for lossless round-trips
};

using Block = std::variant<ProseBlock, EmbedBlock>;

struct Document {
  std::vector<Block> blocks;

  /// Concatenating all blocks reproduces the parsed input byte-for-byte.
  std::string source_text() const;
};

/// Parses markdown, recognizing fenced blocks whose info string is exactly
/// "example" as embed directives (body: "id: <exampleId>", optionally
/// "view: <viewId>"). Everything else is kept as prose, untouched.
/// Throws MalformedDirectiveError.
Document parse_document(const std::string& text);

struct DocIssue {
  int block_index = 0;  // position in Document::blocks
  std::string kind;     // "missing" | "failed" | "skipped" | "unknown-view"
  std::string detail;
  bool operator==(const DocIssue&) const = default;
};

struct BuiltDocument {
  std::string text;
  std::vector<DocIssue> issues;
};

/// Runs each embedded example (each at most once per build, shared cache
/// across embeds) and splices rendered views into the page. Passing embeds
/// become an HTML status marker plus the rendered markdown; anything else
/// becomes a failure marker plus a blockquoted diagnostic and an issue.
BuiltDocument build_document(const Document& doc, const ExampleGraph& graph,
                             const ViewRegistry& views, const RunPolicy& policy = {});

/// build_document without the output text.
std::vector<DocIssue> check_document(const Document& doc, const ExampleGraph& graph,
                                     const ViewRegistry& views, const RunPolicy& policy = {});

}  // namespace exemplar
