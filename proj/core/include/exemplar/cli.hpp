#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exemplar/example_id.hpp"
#include "exemplar/registry.hpp"
#include "exemplar/runner.hpp"
#include "exemplar/views.hpp"

namespace exemplar::cli {

enum class ReportFormat { Text, Json };
enum class GraphFormat { Dot, Json };
enum class InspectFormat { Text, Markdown };

struct RunCommand {
  std::optional<std::string> filter;
  ReportFormat format = ReportFormat::Text;
  bool fail_fast = false;
  Sharing sharing = Sharing::Share;
};

struct GraphCommand {
  GraphFormat format = GraphFormat::Dot;
};

struct InspectCommand {
  ExampleId example_id;
  std::optional<ViewId> view;
  InspectFormat format = InspectFormat::Text;
};

struct DocBuildCommand {
  std::string input_path;
  std::string output_path;
  Sharing sharing = Sharing::Share;
};

struct DocCheckCommand {
  std::vector<std::string> input_paths;
};

struct HelpCommand {
  std::string text;
};

using Command = std::variant<RunCommand, GraphCommand, InspectCommand, DocBuildCommand,
                             DocCheckCommand, HelpCommand>;

/// Parses arguments (program name excluded). Throws UsageError.
Command parse_command(const std::vector<std::string>& args);

/// The example suites and views a command runs against.
struct Environment {
  ExampleRegistry examples;
  ViewRegistry views;
};

inline constexpr int exit_success = 0;
inline constexpr int exit_failures = 1;   // failing examples or doc issues
inline constexpr int exit_usage = 2;      // bad invocation
inline constexpr int exit_bad_graph = 3;  // cycle or unknown dependency

/// Runs a parsed command. Payload goes to out, diagnostics to err; the return
/// value is the process exit code per the table above.
int execute(const Command& command, const Environment& env, std::ostream& out, std::ostream& err);

/// parse_command + execute, mapping UsageError to exit_usage.
int run_cli(const std::vector<std::string>& args, const Environment& env, std::ostream& out,
            std::ostream& err);

}  // namespace exemplar::cli
