#include "dfvs/report.hpp"

#include <charconv>
#include <chrono>
#include <set>
#include <sstream>

#include "dfvs/dfvs.hpp"

namespace dfvs {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kSolution:
      return "solution";
    case Status::kNo:
      return "no";
    case Status::kError:
      break;
  }
  return "error";
}

int exit_code(Status status) {
  switch (status) {
    case Status::kSolution:
      return 0;
    case Status::kNo:
      return 1;
    case Status::kError:
      break;
  }
  return 2;
}

nlohmann::json to_json(const ResultReport& r) {
  nlohmann::json doc;
  doc["status"] = status_name(r.status);
  doc["kind"] = kind_name(r.kind);
  doc["k"] = r.k;
  if (r.solution) doc["solution"] = *r.solution;
  doc["stats"] = {
      {"nodes", r.stats.nodes},
      {"leaves", r.stats.leaves},
      {"max_leaves", r.stats.max_leaves},
      {"flow_calls", r.stats.flow_calls},
      {"shrink_steps", r.stats.shrink_steps},
      {"branch_steps", r.stats.branch_steps},
      {"orderings", r.stats.orderings},
      {"subsets", r.stats.subsets},
      {"find_cut_calls", r.stats.find_cut_calls},
      {"leaf_bound_violations", r.stats.leaf_bound_violations},
  };
  doc["leaf_bound_ok"] = r.leaf_bound_ok;
  doc["wall_time_ms"] = r.wall_time_ms;
  if (r.status == Status::kError) doc["error"] = r.error;
  return doc;
}

ResultReport run_solve(const InstanceFile& instance,
                       std::optional<int> k_override) {
  ResultReport report;
  report.kind = instance.kind;
  report.k = k_override.value_or(instance.k);
  const auto start = std::chrono::steady_clock::now();
  try {
    const DiGraph g = instance.graph();
    CutResult result = CutResult::no();
    if (instance.kind == ProblemKind::kDfvs) {
      DfvsResult r = solve_dfvs(g, report.k);
      result = std::move(r.solution);
      report.stats = r.stats;
    } else {
      auto [r, stats] = solve_ordmc(g, instance.terminals(), report.k);
      result = std::move(r);
      report.stats = stats;
    }
    report.leaf_bound_ok = report.stats.leaf_bound_violations == 0;
    if (result) {
      std::vector<VertexId> sorted(result.set().begin(), result.set().end());
      InstanceFile effective = instance;
      effective.k = report.k;
      VerifyReport check = run_verify(effective, sorted);
      if (!check.valid) {
        throw std::logic_error("solver output failed verification: " +
                               check.reason);
      }
      report.solution = std::move(sorted);
      report.status = Status::kSolution;
    } else {
      report.status = Status::kNo;
    }
  } catch (const std::exception& e) {
    report.status = Status::kError;
    report.solution.reset();
    report.error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

VerifyReport run_verify(const InstanceFile& instance,
                        const std::vector<VertexId>& proposed) {
  const DiGraph g = instance.graph();
  VertexSet s;
  for (VertexId v : proposed) {
    if (!g.has_vertex(v)) {
      return {false, "vertex " + std::to_string(v) + " is not in the graph"};
    }
    if (!s.insert(v).second) {
      return {false, "vertex " + std::to_string(v) + " is listed twice"};
    }
  }
  if (s.size() > static_cast<std::size_t>(instance.k)) {
    return {false, "size " + std::to_string(s.size()) + " exceeds k = " +
                       std::to_string(instance.k)};
  }
  if (instance.kind == ProblemKind::kDfvs) {
    if (!is_dfvs(g, s)) return {false, "graph minus the set still has a cycle"};
    return {true, ""};
  }
  const TerminalSystem t = instance.terminals();
  for (VertexId v : t.all()) {
    if (s.count(v)) {
      return {false, "vertex " + std::to_string(v) + " is a terminal"};
    }
  }
  if (!check_ordered_separation(g, t, s)) {
    return {false, "some x_i still reaches some y_j with i >= j"};
  }
  return {true, ""};
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json doc;
  doc["valid"] = report.valid;
  if (!report.valid) doc["reason"] = report.reason;
  return doc;
}

std::vector<VertexId> parse_solution_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("solution")) {
      throw std::invalid_argument("result document has no solution");
    }
    return doc.at("solution").get<std::vector<VertexId>>();
  }
  std::vector<VertexId> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word.front() == '#') {
      std::getline(in, word);
      continue;
    }
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw std::invalid_argument("bad vertex label '" + word + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace dfvs
