#ifndef DFVS_DFVS_HPP
#define DFVS_DFVS_HPP

#include <utility>
#include <vector>

#include "dfvs/graph.hpp"
#include "dfvs/ordmc.hpp"

namespace dfvs {

struct DfvsResult {
  CutResult solution = CutResult::no();
  SearchStats stats;
};

bool is_dfvs(const DiGraph& g, const VertexSet& s);

// All edges of g whose head lies in s.
EdgeSet entering_edge_set(const DiGraph& g, const VertexSet& s);

struct AuxiliaryInstance {
  DiGraph graph;
  // xs is the ordering of S, ys the matching fresh sink vertices.
  TerminalSystem terminals;
};

// Drops the edges entering S, then gives each s_i a fresh sink t_i fed by
// every vertex outside S that reaches s_i along edges entering S. The
// ordering must list the DFVS S exactly once.
AuxiliaryInstance build_auxiliary_instance(const DiGraph& g,
                                           const std::vector<VertexId>& ordering);

// A DFVS of g disjoint from s and smaller than s, or no. s must be a DFVS.
CutResult replace_dfvs(const DiGraph& g, const VertexSet& s,
                       SearchStats& stats);

// Shrinks a DFVS of size k+1 to one of size at most k, or reports no. Tries
// every kept part F of s_prime, smallest first.
DfvsResult compression_step(const DiGraph& g, const VertexSet& s_prime, int k);

// Iterative compression over the vertices in ascending id order.
DfvsResult solve_dfvs(const DiGraph& g, int k);

}  // namespace dfvs

#endif  // DFVS_DFVS_HPP
