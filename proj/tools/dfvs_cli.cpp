// Command-line front end: solve, generate and verify instances.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dfvs/generate.hpp"
#include "dfvs/instance.hpp"
#include "dfvs/report.hpp"

namespace {

constexpr int kErrorExit = 2;

int print_error_report(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  dfvs::ResultReport report;
  report.status = dfvs::Status::kError;
  report.error = message;
  std::cout << dfvs::to_json(report).dump() << '\n';
  return kErrorExit;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void print_stats(const dfvs::ResultReport& r) {
  const auto& s = r.stats;
  std::cerr << "status        " << dfvs::status_name(r.status) << '\n'
            << "nodes         " << s.nodes << '\n'
            << "leaves        " << s.leaves << " (max per call " << s.max_leaves
            << ")\n"
            << "flow calls    " << s.flow_calls << '\n'
            << "shrink/branch " << s.shrink_steps << '/' << s.branch_steps
            << '\n'
            << "orderings     " << s.orderings << '\n'
            << "subsets       " << s.subsets << '\n'
            << "find_cut runs " << s.find_cut_calls << '\n'
            << "leaf bound    " << (r.leaf_bound_ok ? "ok" : "VIOLATED") << '\n'
            << "time          " << r.wall_time_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed feedback vertex set and ordered multicut solver"};
  app.require_subcommand(1);

  std::string solve_path;
  std::optional<int> solve_k;
  bool solve_stats = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_path, "Instance file, '-' for stdin")
      ->required();
  solve->add_option("--k", solve_k, "Override the parameter from the header")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--stats", solve_stats, "Print search statistics to stderr");

  dfvs::GenerateOptions gen;
  std::string gen_kind = "dfvs";
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--kind", gen_kind, "dfvs or ordmc")
      ->check(CLI::IsMember({"dfvs", "ordmc"}));
  generate->add_option("--n", gen.n, "Number of vertices")->required();
  generate->add_option("--density", gen.density, "Edge probability");
  generate->add_option("--k", gen.k, "Parameter written to the header");
  generate->add_option("--l", gen.l, "Terminal pairs (ordmc)");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_flag("--planted", gen.planted,
                     "Hide a solution of size k in the instance");
  generate->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string verify_path;
  std::string verify_solution_path;
  std::optional<std::string> verify_solution_inline;
  auto* verify = app.add_subcommand("verify", "Check a proposed solution");
  verify->add_option("instance", verify_path, "Instance file")->required();
  verify->add_option("solution-file", verify_solution_path,
                     "Result document or whitespace separated labels");
  verify->add_option("--solution", verify_solution_inline,
                     "Labels given inline, e.g. \"0 3\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kErrorExit;
  }

  if (*solve) {
    dfvs::InstanceFile inst;
    try {
      inst = dfvs::read_instance_file(solve_path);
    } catch (const std::exception& e) {
      return print_error_report(e.what());
    }
    dfvs::ResultReport report = dfvs::run_solve(inst, solve_k);
    if (report.status == dfvs::Status::kError) {
      std::cerr << "error: " << report.error << '\n';
    }
    std::cout << dfvs::to_json(report).dump() << '\n';
    if (solve_stats) print_stats(report);
    return dfvs::exit_code(report.status);
  }

  if (*generate) {
    try {
      gen.kind = dfvs::parse_kind(gen_kind);
      std::string text = dfvs::render_instance(dfvs::generate_instance(gen));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + gen_out + "'");
        out << text;
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kErrorExit;
    }
    return 0;
  }

  try {
    dfvs::InstanceFile inst = dfvs::read_instance_file(verify_path);
    if (verify_solution_path.empty() == !verify_solution_inline) {
      throw std::invalid_argument(
          "give exactly one of solution-file or --solution");
    }
    std::string text = verify_solution_path.empty()
                           ? *verify_solution_inline
                           : slurp(verify_solution_path);
    dfvs::VerifyReport report =
        dfvs::run_verify(inst, dfvs::parse_solution_text(text));
    std::cout << dfvs::to_json(report).dump() << '\n';
    if (!report.valid) std::cerr << "invalid: " << report.reason << '\n';
    return report.valid ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kErrorExit;
  }
}
