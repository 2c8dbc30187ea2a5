#include "exemplar/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exemplar/docbook.hpp"
#include "exemplar/errors.hpp"

namespace exemplar::cli {

namespace {

ExampleId parse_example_id(const std::string& text) {
  if (!ExampleId::valid(text)) throw UsageError("bad example id \"" + text + "\"");
  return ExampleId(text);
}

ViewId parse_view_id(const std::string& text) {
  if (!ViewId::valid(text)) throw UsageError("bad view id \"" + text + "\"");
  return ViewId(text);
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"dependency-aware example runner"};
  app.name("exemplar");
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run examples and report statuses");
  std::string run_filter;
  std::string run_format = "text";
  bool run_fail_fast = false;
  bool run_fresh = false;
  run->add_option("--filter", run_filter, "id glob; ancestors are pulled in automatically");
  run->add_option("--format", run_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--fail-fast", run_fail_fast, "stop launching examples after the first failure");
  run->add_flag("--fresh", run_fresh, "hand each dependent an independent copy of its inputs");

  auto* graph = app.add_subcommand("graph", "print the dependency graph");
  std::string graph_format = "dot";
  graph->add_option("--format", graph_format, "graph format")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* inspect = app.add_subcommand("inspect", "run one example and render its value");
  std::string inspect_id;
  std::string inspect_view;
  std::string inspect_format = "text";
  inspect->add_option("id", inspect_id, "example id")->required();
  inspect->add_option("--view", inspect_view, "view to render (default: raw)");
  inspect->add_option("--format", inspect_format, "render format")
      ->check(CLI::IsMember({"text", "md"}));

  auto* doc = app.add_subcommand("doc", "build or check live documentation");
  doc->require_subcommand(1);
  auto* doc_build = doc->add_subcommand("build", "run embedded examples and write the page");
  std::string doc_in;
  std::string doc_out;
  bool doc_fresh = false;
  doc_build->add_option("input", doc_in, "source page")->required();
  doc_build->add_option("-o,--output", doc_out, "output page")->required();
  doc_build->add_flag("--fresh", doc_fresh, "fresh input copies for embedded examples");
  auto* doc_check = doc->add_subcommand("check", "run embedded examples and report issues");
  std::vector<std::string> doc_paths;
  doc_check->add_option("inputs", doc_paths, "pages to check")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("exemplar");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return HelpCommand{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (run->parsed()) {
    RunCommand cmd;
    if (!run_filter.empty()) cmd.filter = run_filter;
    cmd.format = run_format == "json" ? ReportFormat::Json : ReportFormat::Text;
    cmd.fail_fast = run_fail_fast;
    cmd.sharing = run_fresh ? Sharing::Fresh : Sharing::Share;
    return cmd;
  }
  if (graph->parsed())
    return GraphCommand{graph_format == "json" ? GraphFormat::Json : GraphFormat::Dot};
  if (inspect->parsed()) {
    InspectCommand cmd{parse_example_id(inspect_id), std::nullopt, InspectFormat::Text};
    if (!inspect_view.empty()) cmd.view = parse_view_id(inspect_view);
    if (inspect_format == "md") cmd.format = InspectFormat::Markdown;
    return cmd;
  }
  if (doc_build->parsed())
    return DocBuildCommand{doc_in, doc_out, doc_fresh ? Sharing::Fresh : Sharing::Share};
  return DocCheckCommand{doc_paths};
}

namespace {

std::string format_duration(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string report_to_text(const RunReport& report) {
  std::string out;
  for (const auto& [id, status] : report.statuses) {
    if (const auto* p = std::get_if<Passed>(&status)) {
      out += "PASS " + id.str() + " (" + format_duration(p->duration_ms) + " ms)\n";
    } else if (const auto* f = std::get_if<Failed>(&status)) {
      out += "FAIL " + id.str() +
             (f->phase == FailurePhase::Assertion ? " [assertion]: " : " [setup]: ") +
             f->message + "\n";
    } else {
      out += "SKIP " + id.str() + " (blocked by " +
             std::get<Skipped>(status).blocked_by.str() + ")\n";
    }
  }
  out += std::to_string(report.counts.passed) + " passed, " +
         std::to_string(report.counts.failed) + " failed, " +
         std::to_string(report.counts.skipped) + " skipped (" +
         format_duration(report.total_duration_ms) + " ms)\n";
  return out;
}

std::string graph_to_json(const ExampleGraph& graph) {
  nlohmann::ordered_json j;
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& id : graph.nodes()) nodes.push_back(id.str());
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [dep, dependent] : graph.edges())
    edges.push_back({{"from", dep.str()}, {"to", dependent.str()}});
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string describe_status(const ExampleStatus& status) {
  if (const auto* f = std::get_if<Failed>(&status))
    return std::string("failed (") +
           (f->phase == FailurePhase::Assertion ? "assertion" : "setup") + "): " + f->message;
  if (const auto* s = std::get_if<Skipped>(&status))
    return "skipped: blocked by " + s->blocked_by.str();
  return "passed";
}

bool read_file(const std::string& path, std::string& out, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot read " + path;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int issue_line(const Document& doc, const DocIssue& issue) {
  const auto& block = doc.blocks[static_cast<std::size_t>(issue.block_index)];
  return std::get<EmbedBlock>(block).source_line;
}

struct ExecuteVisitor {
  const Environment& env;
  std::ostream& out;
  std::ostream& err;

  int operator()(const HelpCommand& cmd) const {
    out << cmd.text;
    return exit_success;
  }

  int operator()(const RunCommand& cmd) const {
    ExampleGraph graph = build_graph(env.examples);
    RunPolicy policy{cmd.sharing, cmd.filter, cmd.fail_fast};
    RunReport report = run_all(graph, policy);
    if (cmd.format == ReportFormat::Json) out << report_to_json(report) << "\n";
    else out << report_to_text(report);
    return report.counts.failed == 0 ? exit_success : exit_failures;
  }

  int operator()(const GraphCommand& cmd) const {
    ExampleGraph graph = build_graph(env.examples);
    if (cmd.format == GraphFormat::Dot) out << graph.to_dot();
    else out << graph_to_json(graph) << "\n";
    return exit_success;
  }

  int operator()(const InspectCommand& cmd) const {
    ExampleGraph graph = build_graph(env.examples);
    if (!graph.contains(cmd.example_id)) {
      err << "no example named \"" << cmd.example_id.str() << "\"\n";
      return exit_failures;
    }
    auto [status, value] = run_to(graph, cmd.example_id);
    if (!is_passed(status)) {
      err << cmd.example_id.str() << ": " << describe_status(status) << "\n";
      return exit_failures;
    }
    const ViewId& view = cmd.view ? *cmd.view : ViewId::raw();
    if (view != ViewId::raw() && !env.views.find(value->type_tag, view)) {
      err << "no view \"" << view.str() << "\" registered for type \"" << value->type_tag
          << "\"\n";
      return exit_failures;
    }
    RenderNode node = env.views.render(*value, view);
    out << (cmd.format == InspectFormat::Markdown ? to_markdown(node) : to_text(node)) << "\n";
    return exit_success;
  }

  int operator()(const DocBuildCommand& cmd) const {
    std::string source, error;
    if (!read_file(cmd.input_path, source, error)) {
      err << error << "\n";
      return exit_failures;
    }
    Document doc;
    try {
      doc = parse_document(source);
    } catch (const MalformedDirectiveError& e) {
      err << cmd.input_path << ":" << e.line() << ": " << e.reason() << "\n";
      return exit_failures;
    }
    ExampleGraph graph = build_graph(env.examples);
    BuiltDocument built = build_document(doc, graph, env.views, RunPolicy{cmd.sharing, {}, false});
    std::ofstream file(cmd.output_path, std::ios::binary);
    if (!file || !(file << built.text) || !file.flush()) {
      err << "cannot write " << cmd.output_path << "\n";
      return exit_failures;
    }
    for (const auto& issue : built.issues)
      err << cmd.input_path << ":" << issue_line(doc, issue) << ": " << issue.kind << ": "
          << issue.detail << "\n";
    return built.issues.empty() ? exit_success : exit_failures;
  }

  int operator()(const DocCheckCommand& cmd) const {
    ExampleGraph graph = build_graph(env.examples);
    bool ok = true;
    for (const auto& path : cmd.input_paths) {
      std::string source, error;
      if (!read_file(path, source, error)) {
        err << error << "\n";
        ok = false;
        continue;
      }
      Document doc;
      try {
        doc = parse_document(source);
      } catch (const MalformedDirectiveError& e) {
        out << path << ":" << e.line() << ": malformed: " << e.reason() << "\n";
        ok = false;
        continue;
      }
      auto issues = check_document(doc, graph, env.views);
      if (issues.empty()) {
        out << path << ": ok\n";
        continue;
      }
      for (const auto& issue : issues)
        out << path << ":" << issue_line(doc, issue) << ": " << issue.kind << ": "
            << issue.detail << "\n";
      ok = false;
    }
    return ok ? exit_success : exit_failures;
  }
};

}  // namespace

int execute(const Command& command, const Environment& env, std::ostream& out,
            std::ostream& err) {
  try {
    return std::visit(ExecuteVisitor{env, out, err}, command);
  } catch (const CycleError& e) {
    err << e.what() << "\n";
    return exit_bad_graph;
  } catch (const UnknownDependencyError& e) {
    err << e.what() << "\n";
    return exit_bad_graph;
  } catch (const FilterError& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return exit_failures;
  }
}

int run_cli(const std::vector<std::string>& args, const Environment& env, std::ostream& out,
            std::ostream& err) {
  Command command{HelpCommand{}};
  try {
    command = parse_command(args);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    err << "run \"exemplar --help\" for usage\n";
    return exit_usage;
  }
  return execute(command, env, out, err);
}

}  // namespace exemplar::cli
