#include "dfvs/dfvs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dfvs {

namespace {

// Calls visit on each size-`size` subset of items in lexicographic order
// until it returns true.
template <typename Visit>
bool for_each_combination(const std::vector<VertexId>& items, std::size_t size,
                          Visit&& visit) {
  const std::size_t n = items.size();
  if (size > n) return false;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    VertexSet chosen;
    for (std::size_t i : idx) chosen.insert(items[i]);
    if (visit(chosen)) return true;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace

bool is_dfvs(const DiGraph& g, const VertexSet& s) {
  return is_acyclic(remove_vertices(g, s));
}

EdgeSet entering_edge_set(const DiGraph& g, const VertexSet& s) {
  EdgeSet es;
  for (VertexId v : s) {
    for (VertexId u : g.in_neighbors(v)) es.emplace(u, v);
  }
  return es;
}

AuxiliaryInstance build_auxiliary_instance(
    const DiGraph& g, const std::vector<VertexId>& ordering) {
  VertexSet s;
  for (VertexId v : ordering) {
    if (!g.has_vertex(v)) {
      throw IllegalInstanceError("ordering names unknown vertex " +
                                 std::to_string(v));
    }
    if (!s.insert(v).second) {
      throw IllegalInstanceError("ordering repeats vertex " +
                                 std::to_string(v));
    }
  }
  if (s.empty()) throw IllegalInstanceError("ordering is empty");

  const EdgeSet es = entering_edge_set(g, s);
  AuxiliaryInstance aux{remove_edges(g, es), {}};
  if (!is_acyclic(aux.graph)) {
    throw IllegalInstanceError("ordering is not a DFVS of the graph");
  }
  const DiGraph feeding = edge_subgraph(g, es);
  for (VertexId si : ordering) {
    VertexId ti = aux.graph.add_vertex();
    if (feeding.has_vertex(si)) {
      for (VertexId w : co_reachable_to(feeding, {si})) {
        if (!s.count(w)) aux.graph.add_edge(w, ti);
      }
    }
    aux.terminals.xs.push_back(si);
    aux.terminals.ys.push_back(ti);
  }
  return aux;
}

CutResult replace_dfvs(const DiGraph& g, const VertexSet& s,
                       SearchStats& stats) {
  if (!is_dfvs(g, s)) throw IllegalInstanceError("replace_dfvs: not a DFVS");
  if (is_acyclic(g)) return CutResult::solution({});
  const EdgeSet es = entering_edge_set(g, s);
  if (!is_acyclic(edge_subgraph(g, es))) return CutResult::no();

  // The auxiliary graph does not depend on the ordering; only the pairing of
  // the sources with the sinks does. Build it once and permute the pairs.
  const std::vector<VertexId> sorted(s.begin(), s.end());
  const AuxiliaryInstance aux = build_auxiliary_instance(g, sorted);
  const int budget = static_cast<int>(s.size()) - 1;
  std::vector<std::size_t> perm(sorted.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    TerminalSystem t;
    for (std::size_t i : perm) {
      t.xs.push_back(aux.terminals.xs[i]);
      t.ys.push_back(aux.terminals.ys[i]);
    }
    ++stats.orderings;
    CutResult r = find_cut(aux.graph, t, budget, stats);
    if (r) return r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CutResult::no();
}

DfvsResult compression_step(const DiGraph& g, const VertexSet& s_prime,
                            int k) {
  if (k < 0 || s_prime.size() != static_cast<std::size_t>(k) + 1) {
    throw IllegalInstanceError("compression_step: |s'| must equal k+1");
  }
  if (!is_dfvs(g, s_prime)) {
    throw IllegalInstanceError("compression_step: not a DFVS");
  }
  DfvsResult result;
  const std::vector<VertexId> items(s_prime.begin(), s_prime.end());
  // |F| = k+1 would leave nothing to replace and a set of size k+1.
  for (std::size_t size = 0; size <= static_cast<std::size_t>(k); ++size) {
    bool done = for_each_combination(items, size, [&](const VertexSet& keep) {
      ++result.stats.subsets;
      CutResult r = replace_dfvs(remove_vertices(g, keep),
                                 set_minus(s_prime, keep), result.stats);
      if (!r) return false;
      VertexSet merged = keep;
      merged.insert(r.set().begin(), r.set().end());
      result.solution = CutResult::solution(std::move(merged));
      return true;
    });
    if (done) break;
  }
  return result;
}

DfvsResult solve_dfvs(const DiGraph& g, int k) {
  if (k < 0) throw IllegalInstanceError("k must be non-negative");
  DfvsResult result;
  VertexSet current;
  VertexSet prefix;
  for (VertexId v : g.vertices()) {
    prefix.insert(v);
    const DiGraph gi = induced_subgraph(g, prefix);
    if (is_dfvs(gi, current)) continue;
    if (current.size() + 1 <= static_cast<std::size_t>(k)) {
      current.insert(v);
    } else {
      VertexSet extended = current;
      extended.insert(v);
      DfvsResult step = compression_step(gi, extended, k);
      result.stats += step.stats;
      if (!step.solution) return result;
      current = step.solution.set();
    }
    if (current.size() > static_cast<std::size_t>(k) || !is_dfvs(gi, current)) {
      throw std::logic_error("solve_dfvs: loop invariant broken at vertex " +
                             std::to_string(v));
    }
  }
  result.solution = CutResult::solution(std::move(current));
  return result;
}

}  // namespace dfvs
