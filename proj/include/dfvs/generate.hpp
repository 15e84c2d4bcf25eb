#ifndef DFVS_GENERATE_HPP
#define DFVS_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "dfvs/instance.hpp"

namespace dfvs {

struct GenerateOptions {
  ProblemKind kind = ProblemKind::kDfvs;
  std::size_t n = 10;
  double density = 0.2;
  int k = 1;
  // Terminal pairs for ordmc.
  std::size_t l = 2;
  std::uint64_t seed = 1;
  // Build the instance around a hidden solution of size k.
  bool planted = false;
};

class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic in the options. Edges come out in lexicographic order and
// self-loops are never generated.
//
// dfvs: every ordered pair is an edge with probability density. Planted: a
// random k-set S is chosen, the rest is ordered randomly and only forward
// pairs outside S may become edges, while pairs touching S are unrestricted.
//
// ordmc: a random DAG with random terminals. Planted: the x's come first and
// the y's last in the vertex order, every vertex gets a level with x_i at 2i
// and y_j at 2j-1, and edges avoiding the hidden k-set never decrease the
// level, so no x_i reaches y_j with i >= j once that set is removed. Each
// hidden vertex r is also put on a path x_i -> a -> r -> b -> y_j with
// j <= i through two private helper vertices. Needs n >= 2l + 3k.
InstanceFile generate_instance(const GenerateOptions& opts);

}  // namespace dfvs

#endif  // DFVS_GENERATE_HPP
