#include "dfvs/separator.hpp"

#include <algorithm>
#include <limits>

namespace dfvs {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Vertex-split network. Node 0 is the super source, node 1 the super sink,
// vertex v owns in-node 2+2v and out-node 3+2v. A source terminal is entered
// only through its out-node and a sink terminal left only through its
// in-node, so neither carries a unit split arc.
class SplitNetwork {
 public:
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  SplitNetwork(const DiGraph& g, const std::vector<char>& in_a,
               const std::vector<char>& in_b)
      : adj_(2 + 2 * static_cast<std::size_t>(g.id_bound())) {
    for (VertexId v : g.vertices()) {
      if (in_a[v]) {
        add_arc(kSource, out_node(v), kUnbounded);
      } else if (in_b[v]) {
        add_arc(in_node(v), kSink, kUnbounded);
      } else {
        add_arc(in_node(v), out_node(v), 1);
      }
    }
    for (const auto& [u, v] : g.edges()) {
      // Paths may be shortened to leave A at its last A vertex and stop at
      // their first B vertex, so edges into A and out of B never matter.
      if (u == v || in_b[u] || in_a[v]) continue;
      add_arc(out_node(u), in_node(v), kUnbounded);
    }
  }

  static int in_node(VertexId v) { return 2 + 2 * static_cast<int>(v); }
  static int out_node(VertexId v) { return 3 + 2 * static_cast<int>(v); }
  static VertexId vertex_of(int node) {
    return static_cast<VertexId>((node - 2) / 2);
  }

  // Augments until no path remains or the flow exceeds limit.
  std::size_t max_flow(std::optional<std::size_t> limit) {
    std::size_t flow = 0;
    std::vector<int> parent_arc(adj_.size());
    while (!limit || flow <= *limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::vector<int> queue{kSource};
      parent_arc[kSource] = -2;
      for (std::size_t head = 0; head < queue.size() && parent_arc[kSink] == -1;
           ++head) {
        int x = queue[head];
        for (int id : adj_[x]) {
          const Arc& arc = arcs_[id];
          if (arc.residual > 0 && parent_arc[arc.to] == -1) {
            parent_arc[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (parent_arc[kSink] == -1) break;
      int bottleneck = kUnbounded;
      for (int x = kSink; x != kSource; x = arcs_[parent_arc[x] ^ 1].to) {
        bottleneck = std::min(bottleneck, arcs_[parent_arc[x]].residual);
      }
      for (int x = kSink; x != kSource; x = arcs_[parent_arc[x] ^ 1].to) {
        arcs_[parent_arc[x]].residual -= bottleneck;
        arcs_[parent_arc[x] ^ 1].residual += bottleneck;
      }
      flow += static_cast<std::size_t>(bottleneck);
    }
    return flow;
  }

  std::vector<char> residual_reachable() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{kSource};
    seen[kSource] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int id : adj_[x]) {
        const Arc& arc = arcs_[id];
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

  // Splits the current flow into source-sink paths, cancelling any flow
  // cycles met on the way. Each path is reported as a vertex sequence.
  std::vector<std::vector<VertexId>> decompose() {
    std::vector<int> flow(arcs_.size(), 0);
    for (std::size_t id = 0; id < arcs_.size(); id += 2) {
      flow[id] = arcs_[id].capacity - arcs_[id].residual;
    }
    std::vector<std::vector<VertexId>> paths;
    std::vector<int> on_walk(adj_.size(), -1);
    for (;;) {
      std::vector<int> nodes{kSource};
      std::vector<int> used;
      on_walk[kSource] = 0;
      bool stuck = false;
      while (nodes.back() != kSink) {
        int x = nodes.back();
        int next_arc = -1;
        for (int id : adj_[x]) {
          if ((id & 1) == 0 && flow[id] > 0) {
            next_arc = id;
            break;
          }
        }
        if (next_arc == -1) {
          stuck = true;
          break;
        }
        int y = arcs_[next_arc].to;
        if (on_walk[y] != -1) {
          // Cancel the cycle y -> ... -> x -> y and rewind to y.
          std::size_t from = static_cast<std::size_t>(on_walk[y]);
          for (std::size_t i = from; i < used.size(); ++i) --flow[used[i]];
          --flow[next_arc];
          for (std::size_t i = from + 1; i < nodes.size(); ++i) {
            on_walk[nodes[i]] = -1;
          }
          nodes.resize(from + 1);
          used.resize(from);
          continue;
        }
        on_walk[y] = static_cast<int>(nodes.size());
        nodes.push_back(y);
        used.push_back(next_arc);
      }
      for (int x : nodes) on_walk[x] = -1;
      if (stuck) break;
      for (int id : used) --flow[id];
      std::vector<VertexId> path;
      for (int x : nodes) {
        if (x == kSource || x == kSink) continue;
        VertexId v = vertex_of(x);
        if (path.empty() || path.back() != v) path.push_back(v);
      }
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int residual;
  };

  void add_arc(int from, int to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

struct TerminalMasks {
  std::vector<char> in_a;
  std::vector<char> in_b;
};

TerminalMasks check_terminals(const DiGraph& g, const VertexSet& a,
                              const VertexSet& b) {
  if (a.empty() || b.empty()) {
    throw InvalidTerminalsError("separator terminal sets must be nonempty");
  }
  TerminalMasks m{std::vector<char>(g.id_bound(), 0),
                  std::vector<char>(g.id_bound(), 0)};
  for (VertexId v : a) {
    if (!g.has_vertex(v)) {
      throw InvalidTerminalsError("unknown terminal " + std::to_string(v));
    }
    m.in_a[v] = 1;
  }
  for (VertexId v : b) {
    if (!g.has_vertex(v)) {
      throw InvalidTerminalsError("unknown terminal " + std::to_string(v));
    }
    if (m.in_a[v]) {
      throw InvalidTerminalsError("vertex " + std::to_string(v) +
                                  " is in both terminal sets");
    }
    m.in_b[v] = 1;
  }
  return m;
}

bool has_direct_edge(const DiGraph& g, const VertexSet& a,
                     const std::vector<char>& in_b) {
  for (VertexId u : a) {
    for (VertexId v : g.out_neighbors(u)) {
      if (in_b[v]) return true;
    }
  }
  return false;
}

}  // namespace

std::string SeparatorSize::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

SeparatorResult min_vertex_separator(const DiGraph& g, const VertexSet& a,
                                     const VertexSet& b,
                                     const SeparatorOptions& opts) {
  TerminalMasks masks = check_terminals(g, a, b);
  SeparatorResult result;
  if (has_direct_edge(g, a, masks.in_b)) {
    result.size = SeparatorSize::infinite();
    return result;
  }
  SplitNetwork net(g, masks.in_a, masks.in_b);
  std::size_t flow = net.max_flow(opts.limit);
  result.size = SeparatorSize::finite(flow);
  if (opts.limit && flow > *opts.limit) return result;

  std::vector<char> seen = net.residual_reachable();
  for (VertexId v : g.vertices()) {
    if (masks.in_a[v] || masks.in_b[v]) continue;
    if (seen[SplitNetwork::in_node(v)] && !seen[SplitNetwork::out_node(v)]) {
      result.witness.insert(v);
    }
  }
  if (opts.want_paths) result.disjoint_paths = net.decompose();
  return result;
}

SeparatorSize separator_size(const DiGraph& g, const VertexSet& a,
                             const VertexSet& b,
                             std::optional<std::size_t> limit) {
  SeparatorOptions opts;
  opts.limit = limit;
  return min_vertex_separator(g, a, b, opts).size;
}

SeparatorSize separator_size_after_bypass(const DiGraph& g, VertexId u,
                                          const VertexSet& a,
                                          const VertexSet& b,
                                          std::optional<std::size_t> limit) {
  if (a.count(u) || b.count(u)) {
    throw InvalidTerminalsError("bypassed vertex " + std::to_string(u) +
                                " is a terminal");
  }
  return separator_size(bypass_vertex(g, u), a, b, limit);
}

}  // namespace dfvs
