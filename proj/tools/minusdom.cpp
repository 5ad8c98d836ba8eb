// Command-line front end: solve, recognize, validate, generate and bench
// over the graph formats of the core library. Reports are single JSON
// objects on stdout; logs go to stderr. Exit codes: 0 solved/report,
// 1 error, 2 class rejection, 3 no solution under the given constraints.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "minusdom/cotree.hpp"
#include "minusdom/degenerate_fpt.hpp"
#include "minusdom/dh.hpp"
#include "minusdom/generators.hpp"
#include "minusdom/graph.hpp"
#include "minusdom/hitting_set.hpp"
#include "minusdom/oracle.hpp"
#include "minusdom/reductions.hpp"
#include "minusdom/strongly_chordal.hpp"

using json = nlohmann::ordered_json;
using namespace minusdom;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitClassRejected = 2;
constexpr int kExitNoSolution = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

int oracle_cap() {
  if (const char* env = std::getenv("MINUSDOM_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::runtime_error("MINUSDOM_ORACLE_CAP is not an integer");
    }
  }
  return 16;
}

std::vector<int> parse_vertex_list(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> res;
  int v;
  while (in >> v) {
    if (v < 0 || v >= n) throw std::runtime_error("vertex id out of range: " + std::to_string(v));
    res.push_back(v);
  }
  return res;
}

json witness_json(const MinusFunction& f) {
  json arr = json::array();
  for (int v = 0; v < f.n(); ++v) arr.push_back(f.value(v));
  return arr;
}

struct SolveOptions {
  std::string graph_path;
  std::string algo = "auto";
  int param_k = -1;
  std::string black_file;
  std::string witness_out;
  std::string cotree_file;
  std::string decomposition_file;
  std::string emit_lp_path;
  std::string emit_certificate_path;
  bool verify_oracle = false;
};

int run_solve(const SolveOptions& opt) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = read_file(opt.graph_path);
  Graph g = parse_graph(bytes);
  int cap = oracle_cap();

  json report;
  report["input"] = {{"path", opt.graph_path},
                     {"digest", fnv1a_digest(bytes)},
                     {"n", g.n()},
                     {"m", g.m()}};
  json recognition = json::object();

  std::optional<GammaMinusSolve> solution;
  std::string algo_used;
  std::optional<BWSolveResult> fpt_result;
  std::vector<int> black;

  auto try_cograph = [&]() -> bool {
    if (!opt.cotree_file.empty()) {
      Cotree tree = parse_cotree(read_file(opt.cotree_file));
      solution = gamma_minus_cograph(g, tree);
      recognition["cograph"] = {{"accepted", true}};
      return true;
    }
    auto rec = build_cotree(g);
    recognition["cograph"] = {{"accepted", rec.accepted()}};
    if (!rec.accepted()) {
      recognition["cograph"]["certificate"] = rec.p4;
      return false;
    }
    solution = gamma_minus_cograph(g, *rec.cotree);
    return true;
  };
  auto try_dh = [&]() -> bool {
    if (!opt.decomposition_file.empty()) {
      auto tree = parse_dh_decomposition(read_file(opt.decomposition_file), g);
      solution = gamma_minus_dh(g, tree);
      recognition["distance_hereditary"] = {{"accepted", true}};
      return true;
    }
    auto rec = build_dh_decomposition(g);
    recognition["distance_hereditary"] = {{"accepted", rec.accepted()}};
    if (!rec.accepted()) {
      recognition["distance_hereditary"]["certificate"] = rec.stuck;
      return false;
    }
    solution = gamma_minus_dh(g, *rec.decomposition);
    return true;
  };
  auto try_strongly_chordal = [&]() -> bool {
    auto elim = simple_elimination_ordering(g);
    recognition["strongly_chordal"] = {{"accepted", elim.accepted()}};
    if (!elim.accepted()) {
      recognition["strongly_chordal"]["certificate"] = elim.stuck;
      return false;
    }
    auto solve = gamma_minus_strongly_chordal(g);
    if (!opt.emit_lp_path.empty()) write_file(opt.emit_lp_path, emit_lp_text(solve.lp));
    if (!opt.emit_certificate_path.empty())
      write_file(opt.emit_certificate_path, emit_certificate_text(solve.lp, solve.simplex));
    auto slack = check_complementary_slackness(solve.lp, solve.simplex);
    report["verification"]["integral_optimum"] = true;
    report["verification"]["complementary_slackness"] = slack.ok;
    solution = GammaMinusSolve{solve.gamma_minus, solve.witness};
    return true;
  };
  auto run_oracle = [&]() {
    OracleOptions opts;
    opts.vertex_limit = cap;
    auto res = exact_gamma_minus(g, opts);
    solution = GammaMinusSolve{*res.optimum, res.witnesses.at(0)};
  };

  if (opt.algo == "oracle") {
    algo_used = "oracle";
    run_oracle();
  } else if (opt.algo == "cograph") {
    algo_used = "cograph";
    if (!try_cograph()) {
      report["status"] = "class-rejected";
      report["algorithm"] = algo_used;
      report["recognition"] = recognition;
      std::cout << report.dump() << '\n';
      return kExitClassRejected;
    }
  } else if (opt.algo == "dh") {
    algo_used = "dh";
    if (!try_dh()) {
      report["status"] = "class-rejected";
      report["algorithm"] = algo_used;
      report["recognition"] = recognition;
      std::cout << report.dump() << '\n';
      return kExitClassRejected;
    }
  } else if (opt.algo == "strongly-chordal") {
    algo_used = "strongly-chordal";
    if (!try_strongly_chordal()) {
      report["status"] = "class-rejected";
      report["algorithm"] = algo_used;
      report["recognition"] = recognition;
      std::cout << report.dump() << '\n';
      return kExitClassRejected;
    }
  } else if (opt.algo == "fpt") {
    algo_used = "fpt";
    if (opt.param_k < 0) throw std::runtime_error("--param-k is required with --algo fpt");
    black = opt.black_file.empty()
                ? [&] {
                    std::vector<int> all(g.n());
                    for (int v = 0; v < g.n(); ++v) all[v] = v;
                    return all;
                  }()
                : parse_vertex_list(read_file(opt.black_file), g.n());
    fpt_result = solve_bw_fpt(g, black, opt.param_k);
    if (opt.verify_oracle && g.n() <= cap) {
      auto oracle = exact_bw_min_weight(g, black, opt.param_k, cap);
      bool match = fpt_result->solved ? (oracle && *oracle == fpt_result->weight)
                                      : !oracle.has_value();
      report["verification"]["oracle_agrees"] = match;
      if (!match) throw std::runtime_error("oracle disagrees with the search-tree solver");
    }
    if (!fpt_result->solved) {
      report["status"] = "no-solution";
      report["algorithm"] = algo_used;
      report["param_k"] = opt.param_k;
      std::cout << report.dump() << '\n';
      return kExitNoSolution;
    }
    solution = GammaMinusSolve{fpt_result->weight, fpt_result->witness};
    report["param_k"] = opt.param_k;
  } else if (opt.algo == "auto") {
    if (try_cograph()) {
      algo_used = "cograph";
    } else if (try_dh()) {
      algo_used = "dh";
    } else if (try_strongly_chordal()) {
      algo_used = "strongly-chordal";
    } else if (g.n() <= cap) {
      algo_used = "oracle";
      run_oracle();
    } else {
      report["status"] = "class-rejected";
      report["algorithm"] = "auto";
      report["recognition"] = recognition;
      report["guidance"] =
          "no recognizer accepted the graph and it exceeds the oracle cap; "
          "raise MINUSDOM_ORACLE_CAP or use --algo fpt with --param-k";
      std::cout << report.dump() << '\n';
      return kExitClassRejected;
    }
  } else {
    throw std::runtime_error("unknown algorithm: " + opt.algo);
  }

  if (opt.verify_oracle && opt.algo != "fpt" && g.n() <= cap) {
    OracleOptions opts;
    opts.vertex_limit = cap;
    auto res = exact_gamma_minus(g, opts);
    bool match = *res.optimum == solution->gamma_minus;
    report["verification"]["oracle_gamma_minus"] = *res.optimum;
    report["verification"]["oracle_agrees"] = match;
    if (!match) throw std::runtime_error("oracle disagrees with the selected solver");
  }

  // With a custom black set the witness obeys the black-and-white
  // constraints (checked inside the solver), not plain minus domination.
  bool plain_semantics = opt.algo != "fpt" || static_cast<int>(black.size()) == g.n();
  if (plain_semantics) {
    auto rep = validate_minus_function(g, solution->witness);
    if (!rep.valid || solution->witness.weight() != solution->gamma_minus)
      throw std::runtime_error("internal error: solver witness failed validation");
  }

  if (!opt.witness_out.empty()) {
    write_file(opt.witness_out, write_assignment(solution->witness));
    report["witness_path"] = opt.witness_out;
  } else {
    report["witness_path"] = nullptr;
  }
  report["status"] = "solved";
  report["algorithm"] = algo_used;
  report["gamma_minus"] = solution->gamma_minus;
  report["witness"] = witness_json(solution->witness);
  report["recognition"] = recognition;
  auto elapsed = std::chrono::steady_clock::now() - started;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  std::cout << report.dump() << '\n';
  return kExitSolved;
}

int run_recognize(const std::string& path) {
  Graph g = parse_graph(read_file(path));
  json report;
  auto cograph = build_cotree(g);
  report["cograph"] = {{"accepted", cograph.accepted()}};
  if (!cograph.accepted()) report["cograph"]["certificate"] = cograph.p4;
  auto dh = build_dh_decomposition(g);
  report["distance_hereditary"] = {{"accepted", dh.accepted()}};
  if (!dh.accepted()) report["distance_hereditary"]["certificate"] = dh.stuck;
  auto elim = simple_elimination_ordering(g);
  report["strongly_chordal"] = {{"accepted", elim.accepted()}};
  if (!elim.accepted()) report["strongly_chordal"]["certificate"] = elim.stuck;
  auto degen = degeneracy(g);
  report["degeneracy"] = {{"d", degen.d}, {"ordering", degen.ordering}};
  std::cout << report.dump() << '\n';
  return kExitSolved;
}

int run_validate(const std::string& graph_path, const std::string& assignment_path) {
  Graph g = parse_graph(read_file(graph_path));
  MinusFunction f = parse_assignment(read_file(assignment_path));
  auto rep = validate_minus_function(g, f);
  json report;
  report["valid"] = rep.valid;
  report["violators"] = rep.violators;
  report["weight"] = f.weight();
  report["size"] = f.size();
  std::cout << report.dump() << '\n';
  return kExitSolved;
}

struct GenerateContext {
  std::string out;

  int finish(const Graph& g, json meta) const {
    write_file(out, write_graph(g));
    meta["n"] = g.n();
    meta["m"] = g.m();
    write_file(out + ".meta.jsonl", meta.dump() + "\n");
    json report;
    report["written"] = out;
    report["sidecar"] = out + ".meta.jsonl";
    std::cout << report.dump() << '\n';
    return kExitSolved;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minus-domination toolkit"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("graph", solve_opt.graph_path, "graph file")->required();
  solve->add_option("--algo", solve_opt.algo,
                    "auto|oracle|cograph|dh|strongly-chordal|fpt");
  solve->add_option("--param-k", solve_opt.param_k, "size budget for --algo fpt");
  solve->add_option("--black-file", solve_opt.black_file, "vertex list carrying constraints");
  solve->add_option("--witness-out", solve_opt.witness_out, "write the witness assignment");
  solve->add_option("--cotree", solve_opt.cotree_file, "pre-decomposed cotree term");
  solve->add_option("--decomposition", solve_opt.decomposition_file,
                    "pre-decomposed distance-hereditary term");
  solve->add_option("--emit-lp", solve_opt.emit_lp_path, "write the covering LP as text");
  solve->add_option("--emit-certificate", solve_opt.emit_certificate_path,
                    "write the primal/dual certificate");
  solve->add_flag("--verify-oracle", solve_opt.verify_oracle,
                  "cross-check against the brute-force oracle when it fits");

  std::string recognize_path;
  auto* recognize = app.add_subcommand("recognize", "class membership report");
  recognize->add_option("graph", recognize_path, "graph file")->required();

  std::string validate_graph, validate_assignment;
  auto* validate = app.add_subcommand("validate", "check an assignment");
  validate->add_option("graph", validate_graph, "graph file")->required();
  validate->add_option("assignment", validate_assignment, "assignment file")->required();

  auto* generate = app.add_subcommand("generate", "emit fixture instances");
  generate->require_subcommand(1);
  GenerateContext gen;
  int gen_n = 8, gen_d = 2, gen_copies = 1;
  unsigned gen_seed = 1;
  std::vector<int> gen_parts;
  std::string gen_graph_in, gen_hs_in;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", gen.out, "output file")->required();
  };
  auto* gen_l = generate->add_subcommand("L", "the 15-vertex gadget");
  add_out(gen_l);
  auto* gen_zero = generate->add_subcommand("zero-reduction", "base graph plus gadget copies");
  gen_zero->add_option("--graph", gen_graph_in, "base graph file")->required();
  gen_zero->add_option("--copies", gen_copies, "number of gadget copies");
  add_out(gen_zero);
  auto* gen_split = generate->add_subcommand("splitgraph-from-hs", "hardness split graph");
  gen_split->add_option("--hs", gen_hs_in, "hitting-set file")->required();
  add_out(gen_split);
  auto* gen_hs = generate->add_subcommand("hs-from-vc", "hitting set from vertex cover");
  gen_hs->add_option("--graph", gen_graph_in, "graph file")->required();
  add_out(gen_hs);
  auto* gen_cograph = generate->add_subcommand("random-cograph", "seeded cograph");
  gen_cograph->add_option("--n", gen_n, "vertices");
  gen_cograph->add_option("--seed", gen_seed, "seed");
  add_out(gen_cograph);
  auto* gen_dh = generate->add_subcommand("random-dh", "seeded distance-hereditary graph");
  gen_dh->add_option("--n", gen_n, "vertices");
  gen_dh->add_option("--seed", gen_seed, "seed");
  add_out(gen_dh);
  auto* gen_interval = generate->add_subcommand("random-interval", "seeded interval graph");
  gen_interval->add_option("--n", gen_n, "vertices");
  gen_interval->add_option("--seed", gen_seed, "seed");
  add_out(gen_interval);
  auto* gen_degen = generate->add_subcommand("random-degenerate", "seeded bounded-degeneracy graph");
  gen_degen->add_option("--n", gen_n, "vertices");
  gen_degen->add_option("--d", gen_d, "degeneracy bound");
  gen_degen->add_option("--seed", gen_seed, "seed");
  add_out(gen_degen);
  auto* gen_multi = generate->add_subcommand("multipartite", "complete multipartite graph");
  gen_multi->add_option("sizes", gen_parts, "part sizes")->required();
  add_out(gen_multi);

  std::string bench_dir, bench_out;
  auto* bench = app.add_subcommand("bench", "time the auto solver over a corpus");
  bench->add_option("corpus", bench_dir, "directory of .graph files")->required();
  bench->add_option("--out", bench_out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_opt);
    if (recognize->parsed()) return run_recognize(recognize_path);
    if (validate->parsed()) return run_validate(validate_graph, validate_assignment);
    if (generate->parsed()) {
      if (gen_l->parsed()) {
        auto gadget = gadget_L();
        return gen.finish(gadget.graph,
                          {{"class", "gadget-L"}, {"known_optimum", -1}});
      }
      if (gen_zero->parsed()) {
        Graph h = parse_graph(read_file(gen_graph_in));
        Graph g = zero_reduction(h, gen_copies);
        json meta{{"class", "zero-reduction"}, {"copies", gen_copies}, {"base", gen_graph_in}};
        if (h.n() <= oracle_cap()) {
          OracleOptions opts;
          opts.vertex_limit = oracle_cap();
          meta["known_optimum"] = *exact_gamma_minus(h, opts).optimum - gen_copies;
        }
        return gen.finish(g, meta);
      }
      if (gen_split->parsed()) {
        auto inst = parse_hitting_set(read_file(gen_hs_in));
        auto split = hs32_to_splitgraph(inst);
        json meta{{"class", "splitgraph"},
                  {"universe", inst.universe_size},
                  {"triples", inst.triples.size()},
                  {"padding", split.padding_size}};
        if (inst.universe_size <= 24)
          meta["hitting_set_optimum"] = exact_hitting_set_32(inst);
        return gen.finish(split.graph, meta);
      }
      if (gen_hs->parsed()) {
        Graph g = parse_graph(read_file(gen_graph_in));
        auto inst = vc_to_hs32(g);
        write_file(gen.out, write_hitting_set(inst));
        json meta{{"class", "hs32-from-vc"},
                  {"universe", inst.universe_size},
                  {"triples", inst.triples.size()}};
        if (g.n() <= 24) meta["vertex_cover_optimum"] = exact_vertex_cover(g);
        write_file(gen.out + ".meta.jsonl", meta.dump() + "\n");
        json report{{"written", gen.out}, {"sidecar", gen.out + ".meta.jsonl"}};
        std::cout << report.dump() << '\n';
        return kExitSolved;
      }
      if (gen_cograph->parsed())
        return gen.finish(random_cograph(gen_n, gen_seed),
                          {{"class", "cograph"}, {"seed", gen_seed}});
      if (gen_dh->parsed())
        return gen.finish(random_dh(gen_n, gen_seed),
                          {{"class", "distance-hereditary"}, {"seed", gen_seed}});
      if (gen_interval->parsed())
        return gen.finish(random_interval(gen_n, gen_seed),
                          {{"class", "interval"}, {"seed", gen_seed}});
      if (gen_degen->parsed())
        return gen.finish(random_d_degenerate(gen_n, gen_d, gen_seed),
                          {{"class", "degenerate"}, {"d", gen_d}, {"seed", gen_seed}});
      if (gen_multi->parsed())
        return gen.finish(complete_multipartite(gen_parts),
                          {{"class", "multipartite"}, {"parts", gen_parts}});
      throw std::runtime_error("no generator selected");
    }
    if (bench->parsed()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(bench_dir))
        if (entry.path().extension() == ".graph") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::ostringstream csv;
      csv << "instance,algo,gamma_minus,time_ms\n";
      for (const auto& file : files) {
        Graph g = parse_graph(read_file(file.string()));
        auto started = std::chrono::steady_clock::now();
        std::string algo;
        std::optional<int> gamma;
        if (auto rec = build_cotree(g); rec.accepted()) {
          algo = "cograph";
          gamma = gamma_minus_cograph(g, *rec.cotree).gamma_minus;
        } else if (auto dh = build_dh_decomposition(g); dh.accepted()) {
          algo = "dh";
          gamma = gamma_minus_dh(g, *dh.decomposition).gamma_minus;
        } else if (is_strongly_chordal(g)) {
          algo = "strongly-chordal";
          gamma = gamma_minus_strongly_chordal(g).gamma_minus;
        } else if (g.n() <= oracle_cap()) {
          algo = "oracle";
          OracleOptions opts;
          opts.vertex_limit = oracle_cap();
          gamma = *exact_gamma_minus(g, opts).optimum;
        } else {
          algo = "none";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        csv << file.filename().string() << ',' << algo << ','
            << (gamma ? std::to_string(*gamma) : "") << ',' << ms << '\n';
      }
      if (bench_out.empty())
        std::cout << csv.str();
      else
        write_file(bench_out, csv.str());
      return kExitSolved;
    }
  } catch (const NotInClassError& e) {
    json report{{"error", e.what()}, {"certificate", e.certificate()}};
    std::cout << report.dump() << '\n';
    return kExitClassRejected;
  } catch (const IntegralityError& e) {
    json report{{"error", e.what()}};
    std::cout << report.dump() << '\n';
    std::cerr << "error: " << e.what() << "\n" << e.dump();
    return kExitError;
  } catch (const std::exception& e) {
    json report{{"error", e.what()}};
    std::cout << report.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
