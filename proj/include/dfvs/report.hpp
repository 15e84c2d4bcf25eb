#ifndef DFVS_REPORT_HPP
#define DFVS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfvs/instance.hpp"
#include "dfvs/ordmc.hpp"

namespace dfvs {

enum class Status { kSolution, kNo, kError };

std::string_view status_name(Status status);
// 0 for a solution, 1 for no, 2 for an error.
int exit_code(Status status);

struct ResultReport {
  Status status = Status::kError;
  ProblemKind kind = ProblemKind::kDfvs;
  int k = 0;
  // Sorted; present only with Status::kSolution.
  std::optional<std::vector<VertexId>> solution;
  SearchStats stats;
  bool leaf_bound_ok = true;
  double wall_time_ms = 0.0;
  std::string error;
};

nlohmann::json to_json(const ResultReport& report);

// Solves the instance with its own k, or with k_override when given, and
// re-verifies any solution before reporting it. Never throws.
ResultReport run_solve(const InstanceFile& instance,
                       std::optional<int> k_override = std::nullopt);

struct VerifyReport {
  bool valid = false;
  std::string reason;
};

// Checks a proposed solution against the instance, k included.
VerifyReport run_verify(const InstanceFile& instance,
                        const std::vector<VertexId>& proposed);

nlohmann::json to_json(const VerifyReport& report);

// Accepts either a solve result document or whitespace separated labels.
std::vector<VertexId> parse_solution_text(const std::string& text);

}  // namespace dfvs

#endif  // DFVS_REPORT_HPP
