#ifndef DFVS_ORDMC_HPP
#define DFVS_ORDMC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

class IllegalInstanceError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Ordered terminal sequences (x_1..x_l) and (y_1..y_l). A cut must destroy
// every x_i -> y_j path with i >= j.
struct TerminalSystem {
  std::vector<VertexId> xs;
  std::vector<VertexId> ys;

  std::size_t size() const { return xs.size(); }
  VertexSet all() const;

  // Equal nonzero length, no repeats, disjoint, all present in g.
  void validate(const DiGraph& g) const;

  friend bool operator==(const TerminalSystem&,
                         const TerminalSystem&) = default;
};

// Either a witness vertex set or the answer "no".
class CutResult {
 public:
  static CutResult solution(VertexSet s) { return CutResult(std::move(s)); }
  static CutResult no() { return CutResult(); }

  bool found() const { return set_.has_value(); }
  explicit operator bool() const { return found(); }
  const VertexSet& set() const { return set_.value(); }

  friend bool operator==(const CutResult&, const CutResult&) = default;

 private:
  CutResult() = default;
  explicit CutResult(VertexSet s) : set_(std::move(s)) {}
  std::optional<VertexSet> set_;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t flow_calls = 0;
  std::uint64_t shrink_steps = 0;
  std::uint64_t branch_steps = 0;
  // Filled by the DFVS driver.
  std::uint64_t orderings = 0;
  std::uint64_t subsets = 0;
  std::uint64_t find_cut_calls = 0;
  // Top-level find_cut calls whose leaf count exceeded 2^(2k+1).
  std::uint64_t leaf_bound_violations = 0;
  // Largest leaf count of a single top-level find_cut call.
  std::uint64_t max_leaves = 0;

  SearchStats& operator+=(const SearchStats& other);
};

// 2^(2k+1), saturating.
std::uint64_t leaf_bound(int k);

// True iff g \ r has no x_i -> y_j path for any i >= j.
bool check_ordered_separation(const DiGraph& g, const TerminalSystem& t,
                              const VertexSet& r);

// Returns a graph on the same vertices in which every x_i has no entering
// edge and every y_i has no leaving edge, and in which a non-terminal set
// orderly separates exactly when it does in g.
DiGraph normalize_terminals(const DiGraph& g, const TerminalSystem& t);

// Throws IllegalInstanceError unless g is acyclic, t is valid, every x_i is
// minimal, every y_i is maximal and k >= 0.
void require_legal_input(const DiGraph& g, const TerminalSystem& t, int k);

// Branching search on a legal input. stats accumulates over the call.
CutResult find_cut(const DiGraph& g, const TerminalSystem& t, int k,
                   SearchStats& stats);

// Normalizes the terminals and runs find_cut. A returned set is valid in g.
std::pair<CutResult, SearchStats> solve_ordmc(const DiGraph& g,
                                              const TerminalSystem& t, int k);

}  // namespace dfvs

#endif  // DFVS_ORDMC_HPP
