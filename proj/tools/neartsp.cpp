// Command-line front end: analyze, solve, gen, bench.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "neartsp/neartsp.hpp"

using namespace neartsp;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

int analyze(const std::string& file) {
  auto g = load_instance(file);
  auto p = bad_vertices_p(g);
  auto q = min_violating_set(g);
  std::cout << "n " << g.size() << '\n'
            << "p " << p.bad.size() << '\n'
            << "q " << q.bad.size() << '\n'
            << "violating_triangles " << violating_triangles(g).size() << '\n'
            << "min_violating_set";
  for (Vertex v : q.bad) std::cout << ' ' << v;
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate TSP on graphs that are nearly metric"};
  app.require_subcommand(1);

  std::string file;
  auto* an = app.add_subcommand("analyze", "Print n, p, q and the minimum violating set");
  an->add_option("file", file, "Instance file")->required();

  std::string alg = "alg2";
  std::optional<std::size_t> threads;
  bool oracle = false, no_oracle = false;
  SolveOptions opt;
  auto* so = app.add_subcommand("solve", "Solve an instance and print the report as JSON");
  so->add_option("file", file, "Instance file")->required();
  so->add_option("--alg", alg, "alg1, alg2, alg4, christofides or exact");
  so->add_option("--threads", threads, "Worker threads (default: NEARTSP_THREADS or 1)");
  so->add_flag("--oracle", oracle, "Compute the optimum for the ratio");
  so->add_flag("--no-oracle", no_oracle, "Skip the optimum");
  so->add_option("--held-karp-cap", opt.held_karp_cap, "Largest vertex set for the exact DP");
  so->add_option("--chain-cap-p", opt.chain_cap_p, "Largest p for chain enumeration");
  so->add_option("--chain-cap-q", opt.chain_cap_q, "Largest q for chain enumeration");

  GeneratorSpec spec;
  std::string kind = "random-metric", out;
  auto* ge = app.add_subcommand("gen", "Write a generated instance");
  ge->add_option("--kind", kind, "random-metric, planted-p or planted-q");
  ge->add_option("--n", spec.n, "Vertex count");
  ge->add_option("--target", spec.target, "Planted p or q");
  ge->add_option("--seed", spec.seed, "Seed");
  ge->add_option("--lo", spec.lo, "Smallest base weight");
  ge->add_option("--hi", spec.hi, "Largest base weight");
  ge->add_option("-o,--output", out, "Output file (default: standard output)");

  BenchConfig bench;
  std::vector<std::string> bench_algs;
  bool bench_no_oracle = false;
  auto* be = app.add_subcommand("bench", "Run a seeded suite and write a CSV report");
  be->add_option("--suite", bench.suite, "metric, p or q");
  be->add_option("--count", bench.count, "Number of instances");
  be->add_option("--seed", bench.seed, "Suite seed");
  be->add_option("--alg", bench_algs, "Algorithms to run (default: the suite's)");
  be->add_option("--threads", threads, "Worker threads (default: NEARTSP_THREADS or 1)");
  be->add_flag("--no-oracle", bench_no_oracle, "Skip the optimum");
  be->add_option("-o,--output", out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorKind::InvalidArgument);
  }

  try {
    if (*an) return analyze(file);
    if (*so) {
      auto g = load_instance(file);
      opt.threads = threads.value_or(threads_from_env(1));
      SolveReport r = solve(g, parse_algorithm(alg), opt);
      const bool want = oracle || (!no_oracle && g.size() <= kBruteForceCap);
      if (want) attach_oracle(r, g, opt.held_karp_cap);
      std::cout << to_json(r).dump() << '\n';
      return 0;
    }
    if (*ge) {
      spec.kind = parse_generator_kind(kind);
      write_text(out, format_instance(generate(spec)));
      return 0;
    }
    if (*be) {
      bench.threads = threads.value_or(threads_from_env(1));
      bench.oracle = !bench_no_oracle;
      for (const auto& a : bench_algs) bench.algorithms.push_back(parse_algorithm(a));
      write_text(out, format_csv(run_bench(bench)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "neartsp: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "neartsp: " << e.what() << '\n';
    return exit_code(ErrorKind::InvariantViolation);
  }
  return 0;
}
