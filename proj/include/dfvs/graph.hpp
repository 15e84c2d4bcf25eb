#ifndef DFVS_GRAPH_HPP
#define DFVS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dfvs {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<Edge>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertexError : public GraphError {
 public:
  explicit UnknownVertexError(VertexId v);
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(VertexId v);
};

// Directed graph with stable vertex identities. Ids are handed out in
// increasing order and never reused, also in graphs derived from this one,
// so vertex sets computed on a derived graph stay meaningful in its ancestors.
//
// Adjacency lists are kept sorted; parallel edges collapse, self-loops are
// allowed.
class DiGraph {
 public:
  DiGraph() = default;
  // Graph with vertices 0 .. n-1 and no edges.
  explicit DiGraph(std::size_t n);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);

  // In-place mutation for exclusively owned values. The free functions
  // below return derived copies.
  void erase_vertex(VertexId v);
  void erase_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const {
    return v < alive_.size() && alive_[v];
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_edges_; }
  // One past the largest id ever issued by this graph or its ancestors.
  VertexId id_bound() const { return static_cast<VertexId>(alive_.size()); }

  std::span<const VertexId> out_neighbors(VertexId v) const;
  std::span<const VertexId> in_neighbors(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }

  // Ascending.
  std::vector<VertexId> vertices() const;
  // Lexicographic.
  std::vector<Edge> edges() const;

  void require_vertex(VertexId v) const;

  // Same vertex and edge sets. The id counter is not compared.
  friend bool operator==(const DiGraph& a, const DiGraph& b);

 private:
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<char> alive_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
};

// G \ R.
DiGraph remove_vertices(const DiGraph& g, const VertexSet& r);
// G \ ES. Edges absent from g are ignored.
DiGraph remove_edges(const DiGraph& g, const EdgeSet& es);
// G[ES]: the edges of es and the vertices incident to them.
DiGraph edge_subgraph(const DiGraph& g, const EdgeSet& es);
DiGraph induced_subgraph(const DiGraph& g, const VertexSet& vs);
// All edges flipped.
DiGraph reverse(const DiGraph& g);

// A self-loop counts as a cycle.
bool is_acyclic(const DiGraph& g);

// G^C(u): u is removed and every entering neighbor of u gets an edge to
// every leaving neighbor of u (pairs with equal endpoints are skipped).
DiGraph bypass_vertex(const DiGraph& g, VertexId u);

VertexSet reachable_from(const DiGraph& g, const VertexSet& seeds);
VertexSet co_reachable_to(const DiGraph& g, const VertexSet& targets);

std::string to_string(const VertexSet& s);

}  // namespace dfvs

#endif  // DFVS_GRAPH_HPP
