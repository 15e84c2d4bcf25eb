#include "dfvs/oracle.hpp"

#include <numeric>
#include <string>

namespace dfvs::oracle {

namespace {

// Dense local copy of g: vertices renumbered 0..n-1 in ascending id order.
struct Dense {
  std::vector<VertexId> ids;
  std::vector<int> local;  // id -> index, -1 if absent
  std::vector<std::vector<int>> out;

  explicit Dense(const DiGraph& g)
      : ids(g.vertices()), local(g.id_bound(), -1), out(ids.size()) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      local[ids[i]] = static_cast<int>(i);
    }
    for (const auto& [u, v] : g.edges()) out[local[u]].push_back(local[v]);
  }

  // Path search from `from` avoiding removed vertices; true if `to` is hit.
  bool path(int from, int to, const std::vector<char>& removed) const {
    if (removed[from] || removed[to]) return false;
    std::vector<char> seen(ids.size(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : out[v]) {
        if (w == to) return true;
        if (!seen[w] && !removed[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return from == to;
  }

  // Three-colour DFS cycle detection on the non-removed vertices.
  bool has_cycle(const std::vector<char>& removed) const {
    std::vector<int> colour(ids.size(), 0);
    for (std::size_t root = 0; root < ids.size(); ++root) {
      if (removed[root] || colour[root]) continue;
      std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
      colour[root] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next == out[v].size()) {
          colour[v] = 2;
          stack.pop_back();
          continue;
        }
        int w = out[v][next++];
        if (removed[w]) continue;
        if (colour[w] == 1) return true;
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      }
    }
    return false;
  }
};

void check_cap(const DiGraph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw InstanceTooLargeError("oracle limited to " + std::to_string(cap) +
                                " vertices, got " +
                                std::to_string(g.num_vertices()));
  }
}

// Visits subsets of candidates (local indices) by increasing size, in
// lexicographic order within a size, stopping when visit returns true.
template <typename Visit>
bool for_each_subset(const std::vector<int>& candidates, std::size_t max_size,
                     Visit&& visit) {
  const std::size_t n = candidates.size();
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<int> chosen;
      for (std::size_t i : idx) chosen.push_back(candidates[i]);
      if (visit(chosen)) return true;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[below(rng, i)]);
  }
}

}  // namespace

CutResult brute_min_dfvs(const DiGraph& g, int max_size,
                         std::size_t vertex_cap) {
  check_cap(g, vertex_cap);
  Dense d(g);
  std::vector<int> all(d.ids.size());
  std::iota(all.begin(), all.end(), 0);
  VertexSet found;
  bool ok = max_size >= 0 &&
            for_each_subset(all, static_cast<std::size_t>(max_size),
                            [&](const std::vector<int>& chosen) {
                              std::vector<char> removed(d.ids.size(), 0);
                              for (int v : chosen) removed[v] = 1;
                              if (d.has_cycle(removed)) return false;
                              for (int v : chosen) found.insert(d.ids[v]);
                              return true;
                            });
  return ok ? CutResult::solution(found) : CutResult::no();
}

bool brute_orderly_separates(const DiGraph& g, const TerminalSystem& t,
                             const VertexSet& r) {
  Dense d(g);
  std::vector<char> removed(d.ids.size(), 0);
  for (VertexId v : r) removed[d.local.at(v)] = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (d.path(d.local.at(t.xs[i]), d.local.at(t.ys[j]), removed)) {
        return false;
      }
    }
  }
  return true;
}

CutResult brute_ordered_multicut(const DiGraph& g, const TerminalSystem& t,
                                 int k, std::size_t vertex_cap) {
  check_cap(g, vertex_cap);
  Dense d(g);
  const VertexSet terminals = t.all();
  std::vector<int> candidates;
  for (std::size_t i = 0; i < d.ids.size(); ++i) {
    if (!terminals.count(d.ids[i])) candidates.push_back(static_cast<int>(i));
  }
  VertexSet found;
  bool ok = k >= 0 &&
            for_each_subset(candidates, static_cast<std::size_t>(k),
                            [&](const std::vector<int>& chosen) {
                              std::vector<char> removed(d.ids.size(), 0);
                              for (int v : chosen) removed[v] = 1;
                              for (std::size_t i = 0; i < t.size(); ++i) {
                                for (std::size_t j = 0; j <= i; ++j) {
                                  if (d.path(d.local[t.xs[i]],
                                             d.local[t.ys[j]], removed)) {
                                    return false;
                                  }
                                }
                              }
                              for (int v : chosen) found.insert(d.ids[v]);
                              return true;
                            });
  return ok ? CutResult::solution(found) : CutResult::no();
}

SeparatorResult brute_min_separator(const DiGraph& g, const VertexSet& a,
                                    const VertexSet& b,
                                    std::size_t vertex_cap) {
  check_cap(g, vertex_cap);
  SeparatorResult result;
  for (VertexId u : a) {
    for (VertexId v : b) {
      if (g.has_edge(u, v)) {
        result.size = SeparatorSize::infinite();
        return result;
      }
    }
  }
  Dense d(g);
  std::vector<int> candidates;
  for (std::size_t i = 0; i < d.ids.size(); ++i) {
    if (!a.count(d.ids[i]) && !b.count(d.ids[i])) {
      candidates.push_back(static_cast<int>(i));
    }
  }
  for_each_subset(candidates, candidates.size(),
                  [&](const std::vector<int>& chosen) {
                    std::vector<char> removed(d.ids.size(), 0);
                    for (int v : chosen) removed[v] = 1;
                    for (VertexId u : a) {
                      for (VertexId v : b) {
                        if (d.path(d.local[u], d.local[v], removed)) {
                          return false;
                        }
                      }
                    }
                    for (int v : chosen) result.witness.insert(d.ids[v]);
                    result.size = SeparatorSize::finite(chosen.size());
                    return true;
                  });
  return result;
}

DigraphStream::DigraphStream(int n, std::uint64_t seed, std::size_t count)
    : n_(n), exhaustive_(n <= 4), rng_(seed) {
  total_ = exhaustive_ ? (std::size_t{1} << (n * n)) : count;
}

std::optional<DiGraph> DigraphStream::next() {
  if (produced_ == total_) return std::nullopt;
  DiGraph g(static_cast<std::size_t>(n_));
  const std::size_t mask = produced_++;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      bool present = exhaustive_ ? ((mask >> (u * n_ + v)) & 1) != 0
                                 : (rng_() >> 63) != 0;
      if (present) {
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  return g;
}

std::vector<DiGraph> enumerate_small_digraphs(int n, std::uint64_t seed,
                                              std::size_t count) {
  DigraphStream stream(n, seed, count);
  std::vector<DiGraph> out;
  out.reserve(stream.total());
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

DiGraph random_dag(int n, double edge_probability, std::mt19937_64& rng) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  DiGraph g(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (unit(rng) < edge_probability) g.add_edge(order[i], order[j]);
    }
  }
  return g;
}

TerminalSystem random_terminals(const DiGraph& g, std::size_t l,
                                std::mt19937_64& rng) {
  std::vector<VertexId> vs = g.vertices();
  if (vs.size() < 2 * l) {
    throw GraphError("not enough vertices for " + std::to_string(l) +
                     " terminal pairs");
  }
  shuffle(vs, rng);
  TerminalSystem t;
  t.xs.assign(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(l));
  t.ys.assign(vs.begin() + static_cast<std::ptrdiff_t>(l),
              vs.begin() + static_cast<std::ptrdiff_t>(2 * l));
  return t;
}

}  // namespace dfvs::oracle
