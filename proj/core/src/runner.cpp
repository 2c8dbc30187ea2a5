#include "exemplar/runner.hpp"

#include <chrono>
#include <limits>
#include <vector>

#include <json.hpp>

#include "exemplar/errors.hpp"

namespace exemplar {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::size_t kNoBlocker = std::numeric_limits<std::size_t>::max();

bool filter_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '.' || c == '*' || c == '?';
}

void validate_filter(const std::string& pattern) {
  if (pattern.empty()) throw FilterError(pattern, "empty pattern");
  for (char c : pattern)
    if (!filter_char(c))
      throw FilterError(pattern, std::string("unsupported character '") + c + "'");
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) noexcept {
  std::size_t p = 0, t = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

RunSession::RunSession(const ExampleGraph& graph, RunPolicy policy)
    : graph_(graph), policy_(std::move(policy)) {}

const ExampleStatus& RunSession::run_to(const ExampleId& id) {
  if (!graph_.contains(id)) throw UnknownIdError(id.str());
  std::set<ExampleId> selected = graph_.ancestors(id);
  selected.insert(id);
  run_selection(selected);
  return statuses_.at(id);
}

void RunSession::run_all() {
  std::set<ExampleId> selected;
  if (policy_.filter) {
    validate_filter(*policy_.filter);
    // Reverse topo pass: dependents are seen before their deps, so marking a
    // node's deps here yields the full ancestor closure in one sweep.
    const auto& order = graph_.topo_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (selected.count(*it) == 0 && !glob_match(*policy_.filter, it->str())) continue;
      selected.insert(*it);
      for (const auto& dep : graph_.deps(*it)) selected.insert(dep);
    }
  } else {
    selected = graph_.nodes();
  }
  run_selection(selected);
}

void RunSession::run_selection(const std::set<ExampleId>& selected) {
  auto start = Clock::now();
  for (const auto& id : graph_.topo_order()) {
    if (selected.count(id) == 0) continue;
    if (statuses_.count(id) != 0) continue;  // memoized by an earlier run_to
    if (policy_.fail_fast && fail_fast_source_) {
      // Nothing new launches after the first failure. Nodes it blocks are
      // reported as skipped; unrelated nodes drop out of the report.
      if (fail_fast_descendants_.count(id) != 0) {
        blocker_index_[id] = graph_.topo_index(*fail_fast_source_);
        statuses_.emplace(id, Skipped{*fail_fast_source_});
      }
      continue;
    }
    exec_node(id);
    if (policy_.fail_fast && !fail_fast_source_ && is_failed(statuses_.at(id))) {
      fail_fast_source_ = id;
      fail_fast_descendants_ = graph_.transitive_dependents(id);
    }
  }
  total_duration_ms_ += ms_since(start);
}

void RunSession::exec_node(const ExampleId& id) {
  const auto& deps = graph_.deps(id);

  std::size_t blocker = kNoBlocker;
  for (const auto& dep : deps) {
    const ExampleStatus& ds = statuses_.at(dep);
    if (is_failed(ds)) blocker = std::min(blocker, graph_.topo_index(dep));
    else if (is_skipped(ds)) blocker = std::min(blocker, blocker_index_.at(dep));
  }
  if (blocker != kNoBlocker) {
    blocker_index_[id] = blocker;
    statuses_.emplace(id, Skipped{graph_.topo_order()[blocker]});
    return;
  }

  bool in_producer = false;
  try {
    std::vector<ExampleValue> inputs;
    inputs.reserve(deps.size());
    for (const auto& dep : deps)
      inputs.push_back(policy_.sharing == Sharing::Fresh ? fresh_input(dep) : cache_.at(dep));

    auto start = Clock::now();
    in_producer = true;
    ExampleValue value = graph_.definition(id).producer()(inputs);
    double elapsed = ms_since(start);
    cache_.insert_or_assign(id, std::move(value));
    statuses_.emplace(id, Passed{elapsed});
  } catch (const AssertionError& e) {
    // An assertion thrown while preparing inputs is still a setup problem
    // from this node's point of view.
    statuses_.emplace(id, Failed{e.what(), in_producer ? FailurePhase::Assertion
                                                       : FailurePhase::Setup});
  } catch (const std::exception& e) {
    statuses_.emplace(id, Failed{e.what(), FailurePhase::Setup});
  } catch (...) {
    statuses_.emplace(id, Failed{"unknown error", FailurePhase::Setup});
  }
}

ExampleValue RunSession::fresh_input(const ExampleId& id) {
  const ExampleValue& canonical = cache_.at(id);
  if (canonical.duplicate)
    return ExampleValue{canonical.type_tag, canonical.duplicate(canonical.payload),
                        canonical.structure, canonical.duplicate};
  std::vector<ExampleValue> inputs;
  const auto& deps = graph_.deps(id);
  inputs.reserve(deps.size());
  for (const auto& dep : deps) inputs.push_back(fresh_input(dep));
  return graph_.definition(id).producer()(inputs);
}

const ExampleValue* RunSession::value_of(const ExampleId& id) const {
  auto it = cache_.find(id);
  return it == cache_.end() ? nullptr : &it->second;
}

RunReport RunSession::report() const {
  RunReport r;
  r.statuses = statuses_;
  r.cache = cache_;
  for (const auto& [_, status] : statuses_) {
    if (is_passed(status)) ++r.counts.passed;
    else if (is_failed(status)) ++r.counts.failed;
    else ++r.counts.skipped;
  }
  r.total_duration_ms = total_duration_ms_;
  return r;
}

RunReport run_all(const ExampleGraph& graph, const RunPolicy& policy) {
  RunSession session(graph, policy);
  session.run_all();
  return session.report();
}

std::pair<ExampleStatus, std::optional<ExampleValue>> run_to(const ExampleGraph& graph,
                                                             const ExampleId& id,
                                                             const RunPolicy& policy) {
  RunSession session(graph, policy);
  ExampleStatus status = session.run_to(id);
  const ExampleValue* value = session.value_of(id);
  return {std::move(status), value ? std::optional<ExampleValue>(*value) : std::nullopt};
}

std::set<ExampleId> root_causes(const RunReport& report) {
  std::set<ExampleId> out;
  for (const auto& [id, status] : report.statuses)
    if (is_failed(status)) out.insert(id);
  return out;
}

std::size_t simulate_flat_failures(const ExampleGraph& graph, const std::set<ExampleId>& faults) {
  for (const auto& f : faults)
    if (!graph.contains(f)) throw UnknownIdError(f.str());
  if (faults.empty()) return 0;
  std::size_t count = 0;
  for (const auto& id : graph.topo_order()) {
    // Walk the dependency chain this node would inline in a flat runner.
    std::set<ExampleId> seen;
    std::vector<ExampleId> frontier{id};
    bool hit = false;
    while (!frontier.empty() && !hit) {
      ExampleId u = frontier.back();
      frontier.pop_back();
      if (faults.count(u) != 0) {
        hit = true;
        break;
      }
      for (const auto& dep : graph.deps(u))
        if (seen.insert(dep).second) frontier.push_back(dep);
    }
    if (hit) ++count;
  }
  return count;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["summary"] = {{"passed", report.counts.passed},
                  {"failed", report.counts.failed},
                  {"skipped", report.counts.skipped},
                  {"durationMs", report.total_duration_ms}};
  auto examples = nlohmann::ordered_json::array();
  for (const auto& [id, status] : report.statuses) {
    nlohmann::ordered_json e;
    e["id"] = id.str();
    if (const auto* p = std::get_if<Passed>(&status)) {
      e["status"] = "passed";
      e["durationMs"] = p->duration_ms;
    } else if (const auto* f = std::get_if<Failed>(&status)) {
      e["status"] = "failed";
      e["message"] = f->message;
      e["phase"] = f->phase == FailurePhase::Assertion ? "assertion" : "setup";
    } else {
      e["status"] = "skipped";
      e["blockedBy"] = std::get<Skipped>(status).blocked_by.str();
    }
    examples.push_back(std::move(e));
  }
  j["examples"] = std::move(examples);
  return j.dump();
}

}  // namespace exemplar
