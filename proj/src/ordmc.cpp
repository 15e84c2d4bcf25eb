#include "dfvs/ordmc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dfvs/separator.hpp"

namespace dfvs {

namespace {

// Vertices reachable from source in g without entering a blocked vertex.
std::vector<char> reach_avoiding(const DiGraph& g, VertexId source,
                                 const std::vector<char>& blocked) {
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexId> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.out_neighbors(v)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

class CutSearch {
 public:
  explicit CutSearch(SearchStats& stats) : stats_(stats) {}

  CutResult run(const DiGraph& g, const TerminalSystem& t, int k) {
    ++stats_.nodes;
    const std::size_t budget = static_cast<std::size_t>(k);
    const VertexId xl = t.xs.back();

    if (t.size() == 1) {
      ++stats_.leaves;
      ++stats_.flow_calls;
      SeparatorOptions opts;
      opts.limit = budget;
      SeparatorResult sep = min_vertex_separator(g, {xl}, {t.ys.front()}, opts);
      if (sep.size.exceeds(budget)) return CutResult::no();
      return CutResult::solution(std::move(sep.witness));
    }

    const VertexSet ys(t.ys.begin(), t.ys.end());
    ++stats_.flow_calls;
    const SeparatorSize sep = separator_size(g, {xl}, ys, budget);
    if (sep.exceeds(budget)) {
      ++stats_.leaves;
      return CutResult::no();
    }

    if (g.out_degree(xl) == 0) {
      DiGraph rest = g;
      rest.erase_vertex(xl);
      rest.erase_vertex(t.ys.back());
      TerminalSystem shorter = t;
      shorter.xs.pop_back();
      shorter.ys.pop_back();
      return run(rest, shorter, k);
    }

    const VertexId u = g.out_neighbors(xl).front();
    DiGraph bypassed = bypass_vertex(g, u);
    ++stats_.flow_calls;
    if (separator_size(bypassed, {xl}, ys, budget) == sep) {
      ++stats_.shrink_steps;
      return run(bypassed, t, k);
    }

    // Reaching this point requires Sep > 0, hence k > 0.
    if (k == 0) throw std::logic_error("find_cut: branching with k = 0");
    ++stats_.branch_steps;
    CutResult with_u = run(remove_vertices(g, {u}), t, k - 1);
    if (with_u) {
      VertexSet s = with_u.set();
      s.insert(u);
      return CutResult::solution(std::move(s));
    }
    return run(bypassed, t, k);
  }

 private:
  SearchStats& stats_;
};

void verify_cut(const DiGraph& g, const TerminalSystem& t, int k,
                const CutResult& result) {
  if (!result) return;
  const VertexSet& r = result.set();
  if (r.size() > static_cast<std::size_t>(k)) {
    throw std::logic_error("find_cut returned " + to_string(r) +
                           " which exceeds k = " + std::to_string(k));
  }
  if (!check_ordered_separation(g, t, r)) {
    throw std::logic_error("find_cut returned " + to_string(r) +
                           " which does not orderly separate");
  }
}

}  // namespace

VertexSet TerminalSystem::all() const {
  VertexSet s(xs.begin(), xs.end());
  s.insert(ys.begin(), ys.end());
  return s;
}

void TerminalSystem::validate(const DiGraph& g) const {
  if (xs.empty()) throw IllegalInstanceError("terminal sequences are empty");
  if (xs.size() != ys.size()) {
    throw IllegalInstanceError("terminal sequences differ in length");
  }
  VertexSet seen;
  for (const auto* seq : {&xs, &ys}) {
    for (VertexId v : *seq) {
      if (!g.has_vertex(v)) {
        throw IllegalInstanceError("terminal " + std::to_string(v) +
                                   " is not a vertex");
      }
      if (!seen.insert(v).second) {
        throw IllegalInstanceError("terminal " + std::to_string(v) +
                                   " appears twice");
      }
    }
  }
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  flow_calls += other.flow_calls;
  shrink_steps += other.shrink_steps;
  branch_steps += other.branch_steps;
  orderings += other.orderings;
  subsets += other.subsets;
  find_cut_calls += other.find_cut_calls;
  leaf_bound_violations += other.leaf_bound_violations;
  max_leaves = std::max(max_leaves, other.max_leaves);
  return *this;
}

std::uint64_t leaf_bound(int k) {
  int exponent = 2 * k + 1;
  if (exponent >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << exponent;
}

bool check_ordered_separation(const DiGraph& g, const TerminalSystem& t,
                              const VertexSet& r) {
  std::vector<char> blocked(g.id_bound(), 0);
  for (VertexId v : r) {
    g.require_vertex(v);
    blocked[v] = 1;
  }
  for (VertexId v : t.xs) g.require_vertex(v);
  for (VertexId v : t.ys) g.require_vertex(v);
  for (VertexId v : t.all()) {
    if (blocked[v]) {
      throw IllegalInstanceError("cut contains terminal " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<char> seen = reach_avoiding(g, t.xs[i], blocked);
    for (std::size_t j = 0; j <= i; ++j) {
      if (seen[t.ys[j]]) return false;
    }
  }
  return true;
}

DiGraph normalize_terminals(const DiGraph& g, const TerminalSystem& t) {
  t.validate(g);
  if (!is_acyclic(g)) throw IllegalInstanceError("graph has a cycle");
  std::vector<char> is_x(g.id_bound(), 0);
  std::vector<char> is_y(g.id_bound(), 0);
  for (VertexId v : t.xs) is_x[v] = 1;
  for (VertexId v : t.ys) is_y[v] = 1;

  // An edge (p, q) survives or is created iff p is not in Y, q is not in X,
  // and g has a p -> q path whose inner vertices are all terminals.
  DiGraph h(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v)) h.erase_vertex(v);
  }
  std::vector<int> visited(g.id_bound(), -1);
  for (VertexId p : g.vertices()) {
    if (is_y[p]) continue;
    std::vector<VertexId> stack{p};
    visited[p] = static_cast<int>(p);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.out_neighbors(v)) {
        if (visited[w] == static_cast<int>(p)) continue;
        visited[w] = static_cast<int>(p);
        if (!is_x[w]) h.add_edge(p, w);
        if (is_x[w] || is_y[w]) stack.push_back(w);
      }
    }
  }
  return h;
}

void require_legal_input(const DiGraph& g, const TerminalSystem& t, int k) {
  if (k < 0) throw IllegalInstanceError("k must be non-negative");
  t.validate(g);
  if (!is_acyclic(g)) throw IllegalInstanceError("graph has a cycle");
  for (VertexId x : t.xs) {
    if (g.in_degree(x) != 0) {
      throw IllegalInstanceError("terminal " + std::to_string(x) +
                                 " has an entering edge");
    }
  }
  for (VertexId y : t.ys) {
    if (g.out_degree(y) != 0) {
      throw IllegalInstanceError("terminal " + std::to_string(y) +
                                 " has a leaving edge");
    }
  }
}

CutResult find_cut(const DiGraph& g, const TerminalSystem& t, int k,
                   SearchStats& stats) {
  require_legal_input(g, t, k);
  SearchStats local;
  CutResult result = CutSearch(local).run(g, t, k);
  verify_cut(g, t, k, result);
  local.find_cut_calls = 1;
  local.max_leaves = local.leaves;
  if (local.leaves > leaf_bound(k)) local.leaf_bound_violations = 1;
  stats += local;
  return result;
}

std::pair<CutResult, SearchStats> solve_ordmc(const DiGraph& g,
                                              const TerminalSystem& t, int k) {
  if (k < 0) throw IllegalInstanceError("k must be non-negative");
  DiGraph normalized = normalize_terminals(g, t);
  SearchStats stats;
  CutResult result = find_cut(normalized, t, k, stats);
  verify_cut(g, t, k, result);
  return {std::move(result), stats};
}

}  // namespace dfvs
