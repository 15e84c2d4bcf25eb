#ifndef DFVS_INSTANCE_HPP
#define DFVS_INSTANCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dfvs/graph.hpp"
#include "dfvs/ordmc.hpp"

namespace dfvs {

enum class ProblemKind { kDfvs, kOrdmc };

std::string_view kind_name(ProblemKind kind);
ProblemKind parse_kind(std::string_view name);

// Line-oriented instance file:
//
//   # comment
//   p dfvs  <n> <m> <k>
//   p ordmc <n> <m> <k> <l>
//   x <x_1> ... <x_l>        (ordmc only)
//   y <y_1> ... <y_l>        (ordmc only)
//   <u> <v>                  (m edge lines)
//
// Vertices are labelled 0..n-1. Edges are kept in file order.
struct InstanceFile {
  ProblemKind kind = ProblemKind::kDfvs;
  std::size_t n = 0;
  int k = 0;
  std::vector<Edge> edges;
  std::vector<VertexId> xs;
  std::vector<VertexId> ys;

  DiGraph graph() const;
  TerminalSystem terminals() const { return {xs, ys}; }

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Malformed or semantically invalid instance text. line() is 0 when the
// problem is not tied to one line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

InstanceFile parse_instance(std::string_view text);
std::string render_instance(const InstanceFile& instance);

InstanceFile read_instance_file(const std::string& path);

}  // namespace dfvs

#endif  // DFVS_INSTANCE_HPP
