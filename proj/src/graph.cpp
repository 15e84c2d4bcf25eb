#include "dfvs/graph.hpp"

#include <algorithm>
#include <sstream>

namespace dfvs {

namespace {

bool sorted_insert(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool sorted_erase(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

VertexSet search(const DiGraph& g, const VertexSet& start, bool forward) {
  for (VertexId v : start) g.require_vertex(v);
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexId> stack(start.begin(), start.end());
  for (VertexId v : stack) seen[v] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto next = forward ? g.out_neighbors(v) : g.in_neighbors(v);
    for (VertexId w : next) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet out;
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.insert(out.end(), v);
  }
  return out;
}

}  // namespace

UnknownVertexError::UnknownVertexError(VertexId v)
    : GraphError("unknown vertex " + std::to_string(v)), vertex_(v) {}

SelfLoopError::SelfLoopError(VertexId v)
    : GraphError("vertex " + std::to_string(v) + " has a self-loop") {}

DiGraph::DiGraph(std::size_t n)
    : out_(n), in_(n), alive_(n, 1), num_vertices_(n) {}

VertexId DiGraph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  alive_.push_back(1);
  ++num_vertices_;
  return static_cast<VertexId>(alive_.size() - 1);
}

void DiGraph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (sorted_insert(out_[u], v)) {
    sorted_insert(in_[v], u);
    ++num_edges_;
  }
}

void DiGraph::erase_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId w : out_[v]) {
    if (w != v) sorted_erase(in_[w], v);
  }
  for (VertexId w : in_[v]) {
    if (w != v) sorted_erase(out_[w], v);
  }
  bool loop = std::binary_search(out_[v].begin(), out_[v].end(), v);
  num_edges_ -= out_[v].size() + in_[v].size() - (loop ? 1 : 0);
  out_[v] = {};
  in_[v] = {};
  alive_[v] = 0;
  --num_vertices_;
}

void DiGraph::erase_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) return;
  if (sorted_erase(out_[u], v)) {
    sorted_erase(in_[v], u);
    --num_edges_;
  }
}

bool DiGraph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::span<const VertexId> DiGraph::out_neighbors(VertexId v) const {
  require_vertex(v);
  return out_[v];
}

std::span<const VertexId> DiGraph::in_neighbors(VertexId v) const {
  require_vertex(v);
  return in_[v];
}

std::vector<VertexId> DiGraph::vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(num_vertices_);
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) vs.push_back(v);
  }
  return vs;
}

std::vector<Edge> DiGraph::edges() const {
  std::vector<Edge> es;
  es.reserve(num_edges_);
  for (VertexId u = 0; u < alive_.size(); ++u) {
    for (VertexId v : out_[u]) es.emplace_back(u, v);
  }
  return es;
}

void DiGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw UnknownVertexError(v);
}

bool operator==(const DiGraph& a, const DiGraph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.num_edges_ != b.num_edges_) {
    return false;
  }
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

DiGraph remove_vertices(const DiGraph& g, const VertexSet& r) {
  for (VertexId v : r) g.require_vertex(v);
  DiGraph h = g;
  for (VertexId v : r) h.erase_vertex(v);
  return h;
}

DiGraph remove_edges(const DiGraph& g, const EdgeSet& es) {
  DiGraph h = g;
  for (const auto& [u, v] : es) h.erase_edge(u, v);
  return h;
}

DiGraph edge_subgraph(const DiGraph& g, const EdgeSet& es) {
  for (const auto& [u, v] : es) {
    if (!g.has_edge(u, v)) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not in the graph");
    }
  }
  VertexSet incident;
  for (const auto& [u, v] : es) {
    incident.insert(u);
    incident.insert(v);
  }
  DiGraph h(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!incident.count(v)) h.erase_vertex(v);
  }
  for (const auto& [u, v] : es) h.add_edge(u, v);
  return h;
}

DiGraph induced_subgraph(const DiGraph& g, const VertexSet& vs) {
  for (VertexId v : vs) g.require_vertex(v);
  DiGraph h = g;
  for (VertexId v : g.vertices()) {
    if (!vs.count(v)) h.erase_vertex(v);
  }
  return h;
}

DiGraph reverse(const DiGraph& g) {
  DiGraph h(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v)) h.erase_vertex(v);
  }
  for (const auto& [u, v] : g.edges()) h.add_edge(v, u);
  return h;
}

bool is_acyclic(const DiGraph& g) {
  // Kahn: the graph is acyclic iff every vertex reaches in-degree zero.
  std::vector<std::size_t> indeg(g.id_bound(), 0);
  std::vector<VertexId> ready;
  for (VertexId v : g.vertices()) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++processed;
    for (VertexId w : g.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return processed == g.num_vertices();
}

DiGraph bypass_vertex(const DiGraph& g, VertexId u) {
  g.require_vertex(u);
  if (g.has_edge(u, u)) throw SelfLoopError(u);
  auto preds = g.in_neighbors(u);
  auto succs = g.out_neighbors(u);
  std::vector<VertexId> in(preds.begin(), preds.end());
  std::vector<VertexId> out(succs.begin(), succs.end());
  DiGraph h = g;
  h.erase_vertex(u);
  for (VertexId a : in) {
    for (VertexId b : out) {
      if (a != b) h.add_edge(a, b);
    }
  }
  return h;
}

VertexSet reachable_from(const DiGraph& g, const VertexSet& seeds) {
  return search(g, seeds, true);
}

VertexSet co_reachable_to(const DiGraph& g, const VertexSet& targets) {
  return search(g, targets, false);
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace dfvs
