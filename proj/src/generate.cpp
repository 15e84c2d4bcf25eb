#include "dfvs/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dfvs {

namespace {

// Raw engine output only, so streams do not depend on the standard
// library's distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

  std::vector<VertexId> permutation(std::size_t n) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(i)]);
    return order;
  }

 private:
  std::mt19937_64 engine_;
};

void check(const GenerateOptions& o) {
  if (!(o.density >= 0.0 && o.density <= 1.0)) {
    throw InvalidParameterError("density must lie in [0, 1]");
  }
  if (o.k < 0) throw InvalidParameterError("k must be non-negative");
  if (o.kind == ProblemKind::kDfvs) {
    if (o.planted && static_cast<std::size_t>(o.k) > o.n) {
      throw InvalidParameterError("planted k exceeds n");
    }
    return;
  }
  if (o.l == 0) throw InvalidParameterError("l must be at least 1");
  std::size_t needed =
      2 * o.l + (o.planted ? 3 * static_cast<std::size_t>(o.k) : 0);
  if (needed > o.n) {
    throw InvalidParameterError("n = " + std::to_string(o.n) +
                                " is too small for the requested terminals" +
                                (o.planted ? std::string(" and cut") : ""));
  }
}

InstanceFile generate_dfvs(const GenerateOptions& o, Random& rng) {
  InstanceFile inst;
  inst.kind = ProblemKind::kDfvs;
  inst.n = o.n;
  inst.k = o.k;
  std::vector<char> in_s(o.n, 0);
  std::vector<std::size_t> rank(o.n, 0);
  if (o.planted) {
    std::vector<VertexId> order = rng.permutation(o.n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(o.k); ++i) {
      in_s[order[i]] = 1;
    }
    for (std::size_t i = 0; i < o.n; ++i) rank[order[i]] = i;
  }
  for (VertexId u = 0; u < o.n; ++u) {
    for (VertexId v = 0; v < o.n; ++v) {
      if (u == v) continue;
      bool allowed = !o.planted || in_s[u] || in_s[v] || rank[u] < rank[v];
      if (rng.chance(o.density) && allowed) inst.edges.emplace_back(u, v);
    }
  }
  return inst;
}

InstanceFile generate_ordmc(const GenerateOptions& o, Random& rng) {
  InstanceFile inst;
  inst.kind = ProblemKind::kOrdmc;
  inst.n = o.n;
  inst.k = o.k;
  std::vector<VertexId> picks = rng.permutation(o.n);
  inst.xs.assign(picks.begin(), picks.begin() + static_cast<long>(o.l));
  inst.ys.assign(picks.begin() + static_cast<long>(o.l),
                 picks.begin() + static_cast<long>(2 * o.l));

  std::vector<std::size_t> rank(o.n, 0);
  std::vector<VertexId> order = rng.permutation(o.n);
  for (std::size_t i = 0; i < o.n; ++i) rank[order[i]] = o.l + i;

  std::vector<char> in_cut(o.n, 0);
  std::vector<std::size_t> level(o.n, 0);
  std::set<Edge> forced;
  if (o.planted) {
    // Sources first and sinks last, so every cut vertex can sit on a path.
    for (std::size_t i = 0; i < o.l; ++i) {
      rank[inst.xs[i]] = i;
      rank[inst.ys[i]] = 2 * o.n + i;
    }
    for (VertexId v = 0; v < o.n; ++v) level[v] = 1 + rng.below(2 * o.l + 1);
    for (std::size_t i = 0; i < o.l; ++i) {
      level[inst.xs[i]] = 2 * (i + 1);
      level[inst.ys[i]] = 2 * (i + 1) - 1;
    }
    // Each cut vertex r lies on a path x_i -> a -> r -> b -> y_j with j <= i,
    // where a shares the level of x_i and b that of y_j.
    const std::size_t k = static_cast<std::size_t>(o.k);
    for (std::size_t c = 0; c < k; ++c) {
      VertexId r = picks[2 * o.l + c];
      VertexId a = picks[2 * o.l + k + c];
      VertexId b = picks[2 * o.l + 2 * k + c];
      in_cut[r] = 1;
      std::size_t i = rng.below(o.l);
      std::size_t j = rng.below(i + 1);
      level[a] = level[inst.xs[i]];
      level[b] = level[inst.ys[j]];
      std::size_t ranks[3] = {rank[a], rank[r], rank[b]};
      std::sort(std::begin(ranks), std::end(ranks));
      rank[a] = ranks[0];
      rank[r] = ranks[1];
      rank[b] = ranks[2];
      forced.insert({{inst.xs[i], a}, {a, r}, {r, b}, {b, inst.ys[j]}});
    }
  }
  for (VertexId u = 0; u < o.n; ++u) {
    for (VertexId v = 0; v < o.n; ++v) {
      if (rank[u] >= rank[v]) continue;
      bool allowed =
          !o.planted || in_cut[u] || in_cut[v] || level[u] <= level[v];
      bool drawn = rng.chance(o.density);
      if ((drawn && allowed) || forced.count({u, v})) {
        inst.edges.emplace_back(u, v);
      }
    }
  }
  return inst;
}

}  // namespace

InstanceFile generate_instance(const GenerateOptions& opts) {
  check(opts);
  Random rng(opts.seed);
  return opts.kind == ProblemKind::kDfvs ? generate_dfvs(opts, rng)
                                         : generate_ordmc(opts, rng);
}

}  // namespace dfvs
