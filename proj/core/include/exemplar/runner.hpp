#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "exemplar/example_id.hpp"
#include "exemplar/graph.hpp"
#include "exemplar/value.hpp"

namespace exemplar {

/// SHARE passes each cached value to every dependent; FRESH hands each
/// dependent an independent copy (via the value's duplicator, or by re-running
/// the producing subchain when there is none).
enum class Sharing { Share, Fresh };

struct RunPolicy {
  Sharing sharing = Sharing::Share;
  /// Id glob over full example ids; '*' matches any run, '?' one character.
  /// Ancestors of matching nodes are always pulled in.
  std::optional<std::string> filter;
  bool fail_fast = false;
};

enum class FailurePhase { Setup, Assertion };

struct Passed {
  double duration_ms = 0.0;
};

struct Failed {
  std::string message;
  FailurePhase phase = FailurePhase::Setup;
};

struct Skipped {
  /// Earliest (in topo order) non-passed ancestor — the failure that blocked
  /// this example from running.
  ExampleId blocked_by;
};

using ExampleStatus = std::variant<Passed, Failed, Skipped>;

inline bool is_passed(const ExampleStatus& s) { return std::holds_alternative<Passed>(s); }
inline bool is_failed(const ExampleStatus& s) { return std::holds_alternative<Failed>(s); }
inline bool is_skipped(const ExampleStatus& s) { return std::holds_alternative<Skipped>(s); }

struct RunCounts {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

struct RunReport {
  std::map<ExampleId, ExampleStatus> statuses;
  std::map<ExampleId, ExampleValue> cache;  // values of Passed examples only
  RunCounts counts;
  double total_duration_ms = 0.0;
};

/// Executes examples against a graph, memoizing statuses and values so later
/// requests reuse earlier work. One session per run; keep the graph alive for
/// the session's lifetime.
class RunSession {
 public:
  explicit RunSession(const ExampleGraph& graph, RunPolicy policy = {});

  RunSession(const RunSession&) = delete;
  RunSession& operator=(const RunSession&) = delete;

  /// Runs id and whatever ancestors it needs; nothing else. UnknownIdError.
  const ExampleStatus& run_to(const ExampleId& id);

  /// Runs every node selected by the policy filter (all nodes when absent).
  void run_all();

  /// Cached value of a Passed example, or nullptr.
  const ExampleValue* value_of(const ExampleId& id) const;

  RunReport report() const;

 private:
  void run_selection(const std::set<ExampleId>& selected);
  void exec_node(const ExampleId& id);
  ExampleValue fresh_input(const ExampleId& id);

  const ExampleGraph& graph_;
  RunPolicy policy_;
  std::map<ExampleId, ExampleStatus> statuses_;
  std::map<ExampleId, ExampleValue> cache_;
  std::map<ExampleId, std::size_t> blocker_index_;
  std::optional<ExampleId> fail_fast_source_;
  std::set<ExampleId> fail_fast_descendants_;
  double total_duration_ms_ = 0.0;
};

RunReport run_all(const ExampleGraph& graph, const RunPolicy& policy = {});

std::pair<ExampleStatus, std::optional<ExampleValue>> run_to(const ExampleGraph& graph,
                                                             const ExampleId& id,
                                                             const RunPolicy& policy = {});

/// Failed examples are root causes by construction: an example only runs once
/// all of its dependencies passed.
std::set<ExampleId> root_causes(const RunReport& report);

/// How many tests would fail in a runner with no dependency awareness, where
/// every example inlines its whole ancestor chain: counts the nodes whose
/// chain ({n} plus ancestors) intersects the fault set.
std::size_t simulate_flat_failures(const ExampleGraph& graph, const std::set<ExampleId>& faults);

/// Stable JSON serialization of a report; durations are the only field that
/// varies between identical runs.
std::string report_to_json(const RunReport& report);

/// '*' and '?' glob over ids.
bool glob_match(std::string_view pattern, std::string_view text) noexcept;

}  // namespace exemplar
