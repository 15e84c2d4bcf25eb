#include "dfvs/instance.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

namespace dfvs {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("expected non-negative integer for ") +
                               what + ", got '" + std::string(word) + "'");
  }
  return value;
}

VertexId parse_label(std::string_view word, std::size_t line, std::size_t n) {
  std::size_t v = parse_count(word, line, "vertex label");
  if (v >= n) {
    throw ParseError(line, "vertex label " + std::to_string(v) +
                               " out of range [0," + std::to_string(n) + ")");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

std::string_view kind_name(ProblemKind kind) {
  return kind == ProblemKind::kDfvs ? "dfvs" : "ordmc";
}

ProblemKind parse_kind(std::string_view name) {
  if (name == "dfvs") return ProblemKind::kDfvs;
  if (name == "ordmc") return ProblemKind::kOrdmc;
  throw std::invalid_argument("unknown problem kind '" + std::string(name) +
                              "'");
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                              : message),
      line_(line) {}

DiGraph InstanceFile::graph() const {
  DiGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

InstanceFile parse_instance(std::string_view text) {
  InstanceFile inst;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::size_t l = 0;
  std::optional<std::size_t> x_line;
  std::optional<std::size_t> y_line;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;

    if (words[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (words.size() < 2) throw ParseError(line_no, "header lacks a kind");
      try {
        inst.kind = parse_kind(words[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      std::size_t want = inst.kind == ProblemKind::kDfvs ? 5 : 6;
      if (words.size() != want) {
        throw ParseError(line_no, "header for " + std::string(words[1]) +
                                      " takes " + std::to_string(want - 2) +
                                      " numbers");
      }
      inst.n = parse_count(words[2], line_no, "n");
      declared_edges = parse_count(words[3], line_no, "m");
      std::size_t k = parse_count(words[4], line_no, "k");
      if (k > 1000000) throw ParseError(line_no, "k is unreasonably large");
      inst.k = static_cast<int>(k);
      if (inst.kind == ProblemKind::kOrdmc) {
        l = parse_count(words[5], line_no, "l");
        if (l == 0) throw ParseError(line_no, "l must be at least 1");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected header line 'p ...'");

    if (words[0] == "x" || words[0] == "y") {
      if (inst.kind != ProblemKind::kOrdmc) {
        throw ParseError(line_no, "terminal lines are only valid for ordmc");
      }
      auto& slot = words[0] == "x" ? x_line : y_line;
      if (slot) throw ParseError(line_no, "duplicate terminal line");
      slot = line_no;
      if (words.size() != l + 1) {
        throw ParseError(line_no, "expected " + std::to_string(l) +
                                      " terminals");
      }
      auto& seq = words[0] == "x" ? inst.xs : inst.ys;
      for (std::size_t i = 1; i < words.size(); ++i) {
        seq.push_back(parse_label(words[i], line_no, inst.n));
      }
      continue;
    }

    if (words.size() != 2) {
      throw ParseError(line_no, "expected an edge line '<u> <v>'");
    }
    Edge e{parse_label(words[0], line_no, inst.n),
           parse_label(words[1], line_no, inst.n)};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) +
                                    " " + std::to_string(e.second));
    }
    inst.edges.push_back(e);
  }

  if (!have_header) throw ParseError(0, "missing header line 'p ...'");
  if (inst.edges.size() != declared_edges) {
    throw ParseError(0, "header declares " + std::to_string(declared_edges) +
                            " edges, found " +
                            std::to_string(inst.edges.size()));
  }
  if (inst.kind == ProblemKind::kOrdmc) {
    if (!x_line || !y_line) throw ParseError(0, "missing terminal lines");
    DiGraph g = inst.graph();
    try {
      inst.terminals().validate(g);
    } catch (const GraphError& e) {
      throw ParseError(*y_line, e.what());
    }
    if (!is_acyclic(g)) throw ParseError(0, "ordmc graph has a cycle");
  }
  return inst;
}

std::string render_instance(const InstanceFile& inst) {
  std::ostringstream os;
  os << "p " << kind_name(inst.kind) << ' ' << inst.n << ' '
     << inst.edges.size() << ' ' << inst.k;
  if (inst.kind == ProblemKind::kOrdmc) {
    os << ' ' << inst.xs.size() << "\nx";
    for (VertexId v : inst.xs) os << ' ' << v;
    os << "\ny";
    for (VertexId v : inst.ys) os << ' ' << v;
  }
  os << '\n';
  for (const auto& [u, v] : inst.edges) os << u << ' ' << v << '\n';
  return os.str();
}

InstanceFile read_instance_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_instance(text);
}

}  // namespace dfvs
