#ifndef DFVS_SEPARATOR_HPP
#define DFVS_SEPARATOR_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

// Minimum number of removable vertices separating two terminal sets, or
// Infinite when a terminal edge runs straight from one set to the other.
class SeparatorSize {
 public:
  static SeparatorSize finite(std::size_t n) { return SeparatorSize(n, false); }
  static SeparatorSize infinite() { return SeparatorSize(0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Only meaningful when finite.
  std::size_t value() const { return value_; }

  friend bool operator==(const SeparatorSize&, const SeparatorSize&) = default;
  friend std::strong_ordering operator<=>(const SeparatorSize& a,
                                          const SeparatorSize& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  bool exceeds(std::size_t k) const { return infinite_ || value_ > k; }

  std::string to_string() const;

 private:
  SeparatorSize(std::size_t n, bool inf) : value_(n), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

class InvalidTerminalsError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct SeparatorResult {
  SeparatorSize size = SeparatorSize::finite(0);
  // Empty when size is infinite.
  VertexSet witness;
  // Internally vertex-disjoint a->b paths, one per unit of flow. Filled only
  // on request.
  std::vector<std::vector<VertexId>> disjoint_paths;
};

struct SeparatorOptions {
  // Stop augmenting once the flow exceeds this value. The returned size is
  // then limit+1 and means "more than limit"; the witness is left empty.
  std::optional<std::size_t> limit;
  bool want_paths = false;
};

// Sep(G, A, B) by unit-capacity max flow on the vertex-split network.
// Vertices of a and b are not removable.
SeparatorResult min_vertex_separator(const DiGraph& g, const VertexSet& a,
                                     const VertexSet& b,
                                     const SeparatorOptions& opts = {});

// Size only, capped as in SeparatorOptions::limit.
SeparatorSize separator_size(const DiGraph& g, const VertexSet& a,
                             const VertexSet& b,
                             std::optional<std::size_t> limit = std::nullopt);

// Sep(G^C(u), A, B).
SeparatorSize separator_size_after_bypass(
    const DiGraph& g, VertexId u, const VertexSet& a, const VertexSet& b,
    std::optional<std::size_t> limit = std::nullopt);

}  // namespace dfvs

#endif  // DFVS_SEPARATOR_HPP
