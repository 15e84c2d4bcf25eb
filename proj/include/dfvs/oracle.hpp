#ifndef DFVS_ORACLE_HPP
#define DFVS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dfvs/graph.hpp"
#include "dfvs/ordmc.hpp"
#include "dfvs/separator.hpp"

// Exhaustive reference solvers for differential testing. They share no code
// with the solvers beyond the DiGraph accessors: reachability and cycle
// checks are re-implemented here with plain depth-first search.
namespace dfvs::oracle {

inline constexpr std::size_t kDefaultVertexCap = 12;

class InstanceTooLargeError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Size-lexicographic search for the first DFVS of size <= max_size.
CutResult brute_min_dfvs(const DiGraph& g, int max_size,
                         std::size_t vertex_cap = kDefaultVertexCap);

// Size-lexicographic search over non-terminal subsets of size <= k.
CutResult brute_ordered_multicut(const DiGraph& g, const TerminalSystem& t,
                                 int k,
                                 std::size_t vertex_cap = kDefaultVertexCap);

// Exhaustive minimum separator; the witness is the first minimum subset in
// size-lexicographic order.
SeparatorResult brute_min_separator(const DiGraph& g, const VertexSet& a,
                                    const VertexSet& b,
                                    std::size_t vertex_cap = kDefaultVertexCap);

// Independent ordered-separation check by per-pair path search.
bool brute_orderly_separates(const DiGraph& g, const TerminalSystem& t,
                             const VertexSet& r);

// Graphs on vertices 0..n-1. The edge universe is all n*n ordered pairs,
// self-loops included. For n <= 4 every subset of the universe is produced
// in increasing bitmask order (2^(n*n) graphs; seed and count are ignored).
// For larger n, count graphs are drawn with each pair present independently
// with probability 1/2 from a generator seeded with seed.
class DigraphStream {
 public:
  DigraphStream(int n, std::uint64_t seed, std::size_t count);

  std::optional<DiGraph> next();
  bool exhaustive() const { return exhaustive_; }
  // Number of graphs this stream yields in total.
  std::size_t total() const { return total_; }

 private:
  int n_;
  bool exhaustive_;
  std::size_t total_;
  std::size_t produced_ = 0;
  std::mt19937_64 rng_;
};

std::vector<DiGraph> enumerate_small_digraphs(int n, std::uint64_t seed,
                                              std::size_t count);

// Random DAG on vertices 0..n-1: a random vertex order is drawn and every
// forward pair becomes an edge with the given probability. No self-loops.
DiGraph random_dag(int n, double edge_probability, std::mt19937_64& rng);

// l distinct x's and l distinct y's drawn from the vertices of g (needs
// |V| >= 2l).
TerminalSystem random_terminals(const DiGraph& g, std::size_t l,
                                std::mt19937_64& rng);

}  // namespace dfvs::oracle

#endif  // DFVS_ORACLE_HPP
