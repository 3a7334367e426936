#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "safeflow/decomposition.hpp"
#include "safeflow/errors.hpp"
#include "safeflow/funnel.hpp"
#include "safeflow/generators.hpp"
#include "safeflow/io.hpp"
#include "safeflow/oracle.hpp"
#include "safeflow/safety.hpp"
#include "safeflow/simple_enum.hpp"

namespace {

using namespace safeflow;

void diagnostic(const std::string& msg) {
  const char* color = std::getenv("SAFEFLOW_COLOR");
  if (color != nullptr && std::string(color) == "1") {
    std::cerr << "\033[31merror:\033[0m " << msg << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
}

std::string join_vertices(const FlowDAG& g, const Path& p) {
  std::ostringstream out;
  bool first = true;
  for (int v : p.vertices(g)) {
    if (!first) out << " ";
    out << v;
    first = false;
  }
  return out.str();
}

void print_sorted_paths(const FlowDAG& g, std::vector<std::pair<Path, Rational>> paths) {
  std::vector<std::pair<std::vector<int>, Rational>> rows;
  rows.reserve(paths.size());
  for (auto& [p, excess] : paths) rows.emplace_back(p.vertices(g), excess);
  std::sort(rows.begin(), rows.end());
  for (const auto& [vs, excess] : rows) {
    std::cout << to_string(excess) << "\t";
    for (std::size_t i = 0; i < vs.size(); ++i) std::cout << (i ? " " : "") << vs[i];
    std::cout << "\n";
  }
}

void print_stats(const Counters& c) {
  std::cout << "simple_ops=" << c.simple_ops << "\n"
            << "funnel_build_ops=" << c.funnel_build_ops << "\n"
            << "funnel_report_ops=" << c.funnel_report_ops << "\n"
            << "funnel_ops=" << c.funnel_ops() << "\n"
            << "heap_ops=" << c.heap_ops << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

CdEdges resolve_cd(const std::string& mode, int k, int count, std::uint64_t seed) {
  if (mode == "full") return full_cd(k);
  if (mode == "diag") return diagonal_cd(k);
  if (mode == "random") return random_cd(k, count > 0 ? count : k, seed);
  throw InvalidSpecError("unknown --cd mode: " + mode);
}

struct BenchRow {
  std::string family;
  int k, n, m;
  std::uint64_t pf, pc, simple_ops, funnel_ops, heap_ops, simple_ns, funnel_ns;
};

BenchRow bench_one(const std::string& family, int k) {
  FlowDAG g = family == "worst" ? gen_worst(k, full_cd(k)) : gen_best(k, full_cd(k));
  BenchRow row;
  row.family = family;
  row.k = k;
  row.n = g.vertex_count();
  row.m = g.edge_count();

  Counters simple_counters;
  auto t0 = std::chrono::steady_clock::now();
  ConciseRepresentation pc = enumerate_simple(g, &simple_counters);
  auto t1 = std::chrono::steady_clock::now();
  Counters funnel_counters;
  auto paths = enumerate_funnel(g, &funnel_counters);
  auto t2 = std::chrono::steady_clock::now();
  (void)paths;

  row.pf = decompose(g).total_length();
  row.pc = pc.total_length();
  row.simple_ops = simple_counters.simple_ops;
  row.funnel_ops = funnel_counters.funnel_ops();
  row.heap_ops = funnel_counters.heap_ops;
  row.simple_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  row.funnel_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
  return row;
}

int run(int argc, char** argv) {
  CLI::App app{"safe flow-decomposition paths: verification and enumeration"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check the safety of one path");
  std::string verify_graph;
  std::vector<int> verify_vertices;
  std::string verify_edges;
  verify->add_option("graph", verify_graph, "edge-list file or - for stdin")->required();
  verify->add_option("vertices", verify_vertices, "path as a vertex sequence");
  verify->add_option("--edges", verify_edges, "path as a comma-separated edge-id list");

  // decompose
  auto* dec = app.add_subcommand("decompose", "print one flow decomposition");
  std::string dec_graph;
  dec->add_option("graph", dec_graph)->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "report all maximal safe paths");
  std::string enum_graph, enum_algo = "simple";
  bool enum_concise = false, enum_triplets = false, enum_stats = false;
  enumerate->add_option("graph", enum_graph)->required();
  enumerate->add_option("--algo", enum_algo)->check(CLI::IsMember({"simple", "funnel", "both"}));
  enumerate->add_flag("--concise", enum_concise, "print compact paths with interval indices");
  enumerate->add_flag("--triplets", enum_triplets, "print raw funnel triplets");
  enumerate->add_flag("--stats", enum_stats, "print instrumentation counters");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force maximal safe paths (small inputs)");
  std::string oracle_graph;
  oracle->add_option("graph", oracle_graph)->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a flow DAG");
  std::string gen_family, gen_cd = "full", gen_output = "-";
  int gen_k = 2, gen_n = 10, gen_paths = 3, gen_max_w = 5, gen_cd_count = 0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", gen_family)->required()->check(CLI::IsMember({"worst", "best", "random"}));
  gen->add_option("--k", gen_k, "ladder parameter (n = 4k)");
  gen->add_option("--cd", gen_cd)->check(CLI::IsMember({"full", "diag", "random"}));
  gen->add_option("--cd-count", gen_cd_count, "edge count for --cd random");
  gen->add_option("-n,--vertices", gen_n, "vertex count (random family)");
  gen->add_option("--paths", gen_paths, "superposed paths (random family)");
  gen->add_option("--max-w", gen_max_w, "max path weight (random family)");
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--output", gen_output, "output file or - for stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "counter sweep over generator families");
  std::string bench_family = "best", bench_ks = "10,20,40";
  int bench_jobs = 1;
  bench->add_option("--family", bench_family)->check(CLI::IsMember({"worst", "best"}));
  bench->add_option("--k", bench_ks, "comma-separated list of k values");
  bench->add_option("--jobs", bench_jobs, "parallel bench instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      FlowDAG g = read_edge_list_file(verify_graph);
      Path p;
      if (!verify_edges.empty()) {
        p.edge_ids = parse_int_list(verify_edges);
        validate_path(g, p);
      } else if (verify_vertices.size() >= 2) {
        p = path_from_vertices(g, verify_vertices);
      } else {
        throw InvalidPathError("give a vertex sequence or --edges");
      }
      Rational excess = excess_flow(g, p).value;
      bool safe = excess > 0;
      std::cout << "excess=" << to_string(excess) << " safe=" << (safe ? "true" : "false") << "\n";
      return safe ? 0 : 3;
    }

    if (*dec) {
      FlowDAG g = read_edge_list_file(dec_graph);
      for (const WeightedPath& wp : decompose(g).paths) {
        std::cout << to_string(wp.weight) << "\t" << join_vertices(g, wp.path) << "\n";
      }
      return 0;
    }

    if (*enumerate) {
      FlowDAG g = read_edge_list_file(enum_graph);
      Counters counters;
      if (enum_algo == "simple" || enum_algo == "both") {
        ConciseRepresentation rep = enumerate_simple(g, &counters);
        auto expanded = rep.expand(g);
        if (enum_algo == "both") {
          auto funnel_paths = enumerate_funnel(g, &counters);
          std::sort(expanded.begin(), expanded.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          if (expanded.size() != funnel_paths.size() ||
              !std::equal(expanded.begin(), expanded.end(), funnel_paths.begin(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first && a.second == b.second;
                          })) {
            diagnostic("simple and funnel enumerators disagree");
            return 1;
          }
        }
        if (enum_concise) {
          for (const CompactPath& cp : rep.paths) {
            std::cout << join_vertices(g, cp.path);
            for (const SafeWindow& w : cp.intervals) {
              std::cout << "\t[" << w.first_edge << "," << w.last_edge << "]="
                        << to_string(w.excess);
            }
            std::cout << "\n";
          }
        } else {
          print_sorted_paths(g, std::move(expanded));
        }
      } else {
        std::vector<Funnel> funnels = build_funnels(g, &counters);
        std::vector<std::pair<Path, Rational>> expanded;
        std::vector<std::tuple<int, int, Rational>> triplets;
        for (int u = 0; u < g.vertex_count(); ++u) {
          if (funnels[static_cast<size_t>(u)].empty()) continue;
          ReportResult rep = report_maximal(g, funnels[static_cast<size_t>(u)], u, &counters);
          for (const SolutionTriplet& t : rep.solutions) {
            for (Path& p : expand_solutions(g, funnels[static_cast<size_t>(u)], t)) {
              expanded.emplace_back(std::move(p), t.excess);
            }
            triplets.emplace_back(t.characteristic_edge, t.start_vertex, t.excess);
          }
        }
        std::sort(expanded.begin(), expanded.end());
        expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
        if (enum_triplets) {
          std::sort(triplets.begin(), triplets.end());
          for (const auto& [edge, start, excess] : triplets) {
            std::cout << edge << "\t" << start << "\t" << to_string(excess) << "\n";
          }
        } else {
          print_sorted_paths(g, std::move(expanded));
        }
      }
      if (enum_stats) print_stats(counters);
      return 0;
    }

    if (*oracle) {
      FlowDAG g = read_edge_list_file(oracle_graph);
      std::vector<std::pair<Path, Rational>> out;
      for (const Path& p : oracle_maximal_safe(g)) {
        out.emplace_back(p, excess_flow(g, p).value);
      }
      print_sorted_paths(g, std::move(out));
      return 0;
    }

    if (*gen) {
      FlowDAG g = [&] {
        if (gen_family == "worst")
          return gen_worst(gen_k, resolve_cd(gen_cd, gen_k, gen_cd_count, gen_seed));
        if (gen_family == "best")
          return gen_best(gen_k, resolve_cd(gen_cd, gen_k, gen_cd_count, gen_seed));
        return gen_random(gen_n, gen_paths, gen_max_w, gen_seed);
      }();
      if (gen_output == "-") {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream out(gen_output);
        if (!out) throw ParseError("cannot open " + gen_output);
        write_edge_list(out, g);
      }
      return 0;
    }

    if (*bench) {
      std::vector<int> ks = parse_int_list(bench_ks);
      std::vector<BenchRow> rows(ks.size());
      if (bench_jobs > 1) {
        std::vector<std::thread> workers;
        std::size_t next = 0;
        std::mutex mu;
        for (int t = 0; t < bench_jobs; ++t) {
          workers.emplace_back([&] {
            for (;;) {
              std::size_t idx;
              {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= ks.size()) return;
                idx = next++;
              }
              rows[idx] = bench_one(bench_family, ks[idx]);
            }
          });
        }
        for (auto& w : workers) w.join();
      } else {
        for (std::size_t i = 0; i < ks.size(); ++i) rows[i] = bench_one(bench_family, ks[i]);
      }
      std::cout << "family,k,n,m,pf,pc,simple_ops,funnel_ops,heap_ops,simple_ns,funnel_ns\n";
      for (const BenchRow& r : rows) {
        std::cout << r.family << "," << r.k << "," << r.n << "," << r.m << "," << r.pf << ","
                  << r.pc << "," << r.simple_ops << "," << r.funnel_ops << "," << r.heap_ops
                  << "," << r.simple_ns << "," << r.funnel_ns << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    diagnostic(e.what());
    return 2;
  } catch (const std::exception& e) {
    diagnostic(e.what());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
