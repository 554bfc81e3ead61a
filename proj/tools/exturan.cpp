// Command-line front door: evaluate the bound formulas, build and export
// the extremal constructions, analyze graph6 inputs, and run verification
// sweeps with machine-readable reports.
//
// Exit codes: 0 success (and no violations), 1 violations found,
// 2 domain/usage/parse errors, 3 I/O errors, 4 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exturan/constructions.hpp"
#include "exturan/counting.hpp"
#include "exturan/formulas.hpp"
#include "exturan/structure.hpp"
#include "exturan/verify.hpp"

using namespace exturan;

namespace {

struct io_failure {
  std::string what;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_failure{"cannot open " + path + " for writing"};
  out << content;
  if (!out) throw io_failure{"write to " + path + " failed"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_line(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

// Two-color a connected component structure; nullopt if an odd cycle exists.
std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool odd = false;
      g.for_neighbors(v, [&](int u) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  return color;
}

struct VerifyArgs {
  BoundParams p;
  bool exhaustive = false;
  std::uint64_t random_count = 0;
  bool seed_given = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out, csv_out, format = "plain";
  std::string threshold_override;
  std::string witness_dir;
};

void add_verify_flags(CLI::App* cmd, VerifyArgs& a, bool wants_b, bool wants_r,
                      bool wants_st) {
  if (wants_b) cmd->add_option("--b", a.p.b, "Y-part size");
  cmd->add_option("--n", a.p.n, "X-part size / order")->required();
  cmd->add_option("--k", a.p.k, "shortfall parameter")->required();
  if (wants_r) cmd->add_option("--r", a.p.r, "minimum-degree floor");
  if (wants_st) {
    cmd->add_option("--s", a.p.s, "pattern side s");
    cmd->add_option("--t", a.p.t, "pattern side t");
  }
  cmd->add_flag("--exhaustive", a.exhaustive, "enumerate every labeled graph");
  cmd->add_option("--random", a.random_count, "number of seeded random samples");
  cmd->add_option("--seed", a.seed, "sample seed (required with --random)")
      ->each([&a](const std::string&) { a.seed_given = true; });
  cmd->add_option("--jobs", a.jobs, "shard parallelism degree")->default_val(1);
  cmd->add_option("--out", a.out, "write the JSON report here");
  cmd->add_option("--csv-out", a.csv_out, "write the CSV summary here");
  cmd->add_option("--format", a.format, "stdout format: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd->add_option("--threshold", a.threshold_override,
                  "what-if sweep: replace the claim's threshold with this value");
  cmd->add_option("--witnesses-out", a.witness_dir,
                  "write each witness and violation as a standalone .g6 file here");
}

GraphClassSpec spec_for(const std::string& claim, const VerifyArgs& a) {
  GraphClassSpec s;
  if (claim == "c" || claim == "p") {
    s.mode = ClassMode::general;
    s.n = a.p.n;
    s.connected = true;
    s.biconnected = claim == "c";
    s.min_degree = a.p.r;
  } else {
    s.mode = ClassMode::bipartite;
    s.n = a.p.n;
    s.b = a.p.b;
    if (claim == "cb" || claim == "pb" || claim == "mb" || claim == "adamus" ||
        claim == "conj41") {
      s.connected = true;
      s.min_degree = a.p.r;
    }
  }
  if (a.exhaustive) {
    s.enumeration = Enumeration::exhaustive;
  } else {
    s.enumeration = Enumeration::random;
    s.sample_count = a.random_count;
    s.seed = a.seed;
  }
  return s;
}

int emit_report(const VerifyReport& rep, const VerifyArgs& a, double seconds) {
  if (!a.out.empty()) write_file(a.out, rep.to_json());
  if (!a.csv_out.empty()) write_file(a.csv_out, rep.to_csv());
  if (!a.witness_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(a.witness_dir, ec);
    if (ec) throw io_failure{"cannot create " + a.witness_dir};
    for (std::size_t i = 0; i < rep.violations.size(); ++i)
      write_file(a.witness_dir + "/violation_" + std::to_string(i) + ".g6",
                 rep.violations[i] + "\n");
    for (std::size_t i = 0; i < rep.extremal_witnesses.size(); ++i)
      write_file(a.witness_dir + "/witness_" + std::to_string(i) + ".g6",
                 rep.extremal_witnesses[i] + "\n");
  }
  if (a.format == "json") {
    std::cout << rep.to_json();
  } else if (a.format == "csv") {
    std::cout << rep.to_csv();
  } else {
    std::cout << "claim=" << claim_name(rep.claim) << " class_size=" << rep.class_size
              << " threshold=" << to_decimal(rep.threshold)
              << " violations=" << rep.violations.size() << " extremal="
              << (rep.extremal_value ? to_decimal(*rep.extremal_value) : "none")
              << " tight=" << (rep.tight ? "true" : "false") << "\n";
    for (const std::string& w : rep.violations) std::cout << "violation " << w << "\n";
  }
  std::cerr << "runtime " << static_cast<long long>(seconds * 1000) << " ms\n";
  return rep.violations.empty() ? 0 : 1;
}

int run_verify_or_search(const std::string& claim, VerifyArgs a) {
  if (!a.exhaustive && a.random_count == 0)
    throw domain_error("choose --exhaustive or --random N");
  if (!a.exhaustive && !a.seed_given)
    throw domain_error("--random requires --seed");
  if (claim == "wang" || claim == "adamus") a.p.b = a.p.n;  // balanced statements
  GraphClassSpec spec = spec_for(claim, a);
  Claim c = claim == "cb"        ? Claim::CB
            : claim == "pb"      ? Claim::PB
            : claim == "mb"      ? Claim::MB
            : claim == "c"       ? Claim::C
            : claim == "p"       ? Claim::P
            : claim == "jackson" ? Claim::jackson_exbip
            : claim == "li-ning" ? Claim::li_ning_exbip
            : claim == "wang"    ? Claim::wang_matching
            : claim == "adamus"  ? Claim::adamus_edges
                                 : Claim::conj_41;
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  if (!a.threshold_override.empty()) {
    rep = sweep_with_threshold(c, a.p, spec, CopyCount(a.threshold_override), a.jobs);
  } else if (claim == "cb" || claim == "pb" || claim == "mb" || claim == "c" ||
             claim == "p") {
    rep = verify_theorem(c, a.p, spec, a.jobs);
  } else if (claim == "jackson" || claim == "li-ning" || claim == "wang") {
    rep = verify_baseline(c, a.p, spec, a.jobs);
  } else {
    rep = search_conjecture(c, a.p, spec, a.jobs);
  }
  auto t1 = std::chrono::steady_clock::now();
  return emit_report(rep, a, std::chrono::duration<double>(t1 - t0).count());
}

nlohmann::ordered_json region_json(const std::vector<Region>& rs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (Region r : rs)
    j.push_back(r == Region::A   ? "A"
                : r == Region::B ? "B"
                : r == Region::C ? "C"
                                 : "D");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for generalized Turan bounds on long cycles"};
  app.require_subcommand(1);

  // ---- eval ----------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a bound formula or threshold");
  eval->require_subcommand(1);
  struct {
    int b = 0, n = 0, k = 0, a = 0, s = 1, t = 1, r = 1;
  } ev;
  auto* evf = eval->add_subcommand("f", "f_{s,t}(b, n, n-k, a)");
  evf->add_option("--b", ev.b)->required();
  evf->add_option("--n", ev.n)->required();
  evf->add_option("--k", ev.k)->required();
  evf->add_option("--a", ev.a)->required();
  evf->add_option("--s", ev.s);
  evf->add_option("--t", ev.t);
  auto* evg = eval->add_subcommand("g", "g_{s,t}(n, k, a)");
  evg->add_option("--n", ev.n)->required();
  evg->add_option("--k", ev.k)->required();
  evg->add_option("--a", ev.a)->required();
  evg->add_option("--s", ev.s);
  evg->add_option("--t", ev.t);
  const char* tnames[] = {"threshold-cb", "threshold-pb", "threshold-mb",
                          "threshold-c", "threshold-p"};
  std::vector<CLI::App*> tcmds;
  for (const char* name : tnames) {
    auto* c = eval->add_subcommand(name, "theorem threshold");
    if (std::string(name) == "threshold-cb" || std::string(name) == "threshold-pb" ||
        std::string(name) == "threshold-mb")
      c->add_option("--b", ev.b)->required();
    c->add_option("--n", ev.n)->required();
    c->add_option("--k", ev.k)->required();
    c->add_option("--r", ev.r)->required();
    c->add_option("--s", ev.s);
    c->add_option("--t", ev.t);
    tcmds.push_back(c);
  }

  // ---- construct -----------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build an extremal construction");
  construct->require_subcommand(1);
  struct {
    int b = 0, n = 0, k = 0, a = 0;
    std::string out;
    bool analyze = false, no_check = false;
  } co;
  auto* cof = construct->add_subcommand("F", "bipartite family F_{b,n,n-k,a}");
  cof->add_option("--b", co.b)->required();
  cof->add_option("--n", co.n)->required();
  cof->add_option("--k", co.k)->required();
  cof->add_option("--a", co.a)->required();
  cof->add_option("--out", co.out)->required();
  cof->add_flag("--analyze", co.analyze);
  cof->add_flag("--no-check", co.no_check);
  auto* coh = construct->add_subcommand("H", "general family H_{n,k,a}");
  coh->add_option("--n", co.n)->required();
  coh->add_option("--k", co.k)->required();
  coh->add_option("--a", co.a)->required();
  coh->add_option("--out", co.out)->required();
  coh->add_flag("--analyze", co.analyze);
  coh->add_flag("--no-check", co.no_check);

  // ---- analyze -------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "analyze a graph6 file");
  struct {
    std::string input;
    std::vector<int> svals, tvals, alphas;
    int budget = kDefaultSolverBudget;
    std::string format = "plain";
  } an;
  analyze->add_option("input", an.input, "graph6 file")->required();
  analyze->add_option("--s", an.svals, "pattern side s (repeatable, zipped with --t)");
  analyze->add_option("--t", an.tvals, "pattern side t");
  analyze->add_option("--alpha", an.alphas, "core parameters to peel at");
  analyze->add_option("--budget", an.budget, "solver order budget");
  analyze->add_option("--format", an.format)->check(CLI::IsMember({"plain", "json"}));

  // ---- verify / search -----------------------------------------------
  auto* verify = app.add_subcommand("verify", "machine-check a theorem or baseline");
  verify->require_subcommand(1);
  VerifyArgs va;
  const std::vector<std::pair<std::string, std::string>> verify_claims = {
      {"cb", "cycle of length >= 2n-2k in connected bipartite graphs"},
      {"pb", "path on 2n-2k vertices in connected bipartite graphs"},
      {"mb", "matching with n-k edges in connected bipartite graphs"},
      {"c", "cycle of length >= k in 2-connected graphs"},
      {"p", "path on k vertices in connected graphs"},
      {"jackson", "edge-extremal value for cycles of length >= 2n-2k"},
      {"li-ning", "edge-extremal value for the cycle of length exactly 2n-2k"},
      {"wang", "K_{s,t}-extremal value over matching-free balanced graphs"},
  };
  for (const auto& [name, desc] : verify_claims) {
    auto* c = verify->add_subcommand(name, desc);
    bool bip = name != "c" && name != "p";
    bool wants_r = name != "jackson" && name != "li-ning" && name != "wang";
    bool wants_st = name != "jackson" && name != "li-ning";
    add_verify_flags(c, va, bip && name != "wang", wants_r, wants_st);
  }
  auto* search = app.add_subcommand("search", "counterexample search for a conjecture");
  search->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> search_claims = {
      {"adamus", "edge bound forcing a cycle of length exactly 2n-2k (balanced)"},
      {"conj41", "K_{s,t} bound forcing a cycle of length exactly 2n-2k"},
  };
  for (const auto& [name, desc] : search_claims) {
    auto* c = search->add_subcommand(name, desc);
    add_verify_flags(c, va, name == "conj41", true, name == "conj41");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    // eval
    if (evf->parsed()) {
      std::cout << to_decimal(eval_f(ev.b, ev.n, ev.n - ev.k, ev.a, ev.s, ev.t)) << "\n";
      return 0;
    }
    if (evg->parsed()) {
      std::cout << to_decimal(eval_g(ev.n, ev.k, ev.a, ev.s, ev.t)) << "\n";
      return 0;
    }
    for (std::size_t i = 0; i < tcmds.size(); ++i) {
      if (!tcmds[i]->parsed()) continue;
      BoundParams p{ev.b, ev.n, ev.k, ev.r, ev.s, ev.t};
      CopyCount v = i == 0   ? threshold_cycle_bipartite(p)
                    : i == 1 ? threshold_path_bipartite(p)
                    : i == 2 ? threshold_matching_bipartite(p)
                    : i == 3 ? threshold_cycle_general(p)
                             : threshold_path_general(p);
      std::cout << to_decimal(v) << "\n";
      return 0;
    }

    // construct
    if (cof->parsed() || coh->parsed()) {
      Graph g;
      nlohmann::ordered_json sidecar;
      if (cof->parsed()) {
        auto f = build_F(co.b, co.n, co.k, co.a, !co.no_check);
        g = f.bip.graph;
        sidecar["family"] = "F";
        sidecar["params"] = {{"b", co.b}, {"n", co.n}, {"k", co.k}, {"a", co.a}};
        sidecar["parts"] = {{"n", f.bip.n}, {"b", f.bip.b}};
        sidecar["region_of"] = region_json(f.region_of);
      } else {
        auto h = build_H(co.n, co.k, co.a, !co.no_check);
        g = h.graph;
        sidecar["family"] = "H";
        sidecar["params"] = {{"n", co.n}, {"k", co.k}, {"a", co.a}};
        sidecar["region_of"] = region_json(h.region_of);
      }
      write_file(co.out, encode_graph6(g) + "\n");
      write_file(co.out + ".json", sidecar.dump(2) + "\n");
      std::cout << "order=" << g.order() << " size=" << g.edge_count()
                << " min_degree=" << min_degree(g);
      if (co.analyze)
        std::cout << " circumference=" << circumference(g, std::max(kDefaultSolverBudget, g.order()));
      std::cout << "\n";
      return 0;
    }

    // analyze
    if (analyze->parsed()) {
      Graph g = decode_graph6(strip_line(read_file(an.input)));
      if (an.svals.size() != an.tvals.size())
        throw domain_error("--s and --t must be given the same number of times");
      nlohmann::ordered_json out;
      out["order"] = g.order();
      out["size"] = g.edge_count();
      out["connected"] = is_connected(g);
      out["biconnected"] = is_biconnected(g);
      if (g.order() > 0) out["min_degree"] = min_degree(g);
      nlohmann::ordered_json counts = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < an.svals.size(); ++i)
        counts.push_back({{"s", an.svals[i]},
                          {"t", an.tvals[i]},
                          {"count", to_decimal(count_kst(g, an.svals[i], an.tvals[i]))}});
      out["kst_counts"] = counts;
      out["circumference"] = circumference(g, an.budget);
      out["longest_path_order"] = longest_path_order(g, an.budget);
      if (auto colors = two_color(g)) {
        out["bipartite"] = true;
        out["max_matching"] = max_matching(bipartition_check(g, *colors));
      } else {
        out["bipartite"] = false;
      }
      nlohmann::ordered_json cores = nlohmann::ordered_json::array();
      for (int alpha : an.alphas)
        cores.push_back({{"alpha", alpha},
                         {"surviving", core(g, alpha).surviving.size()}});
      out["cores"] = cores;
      if (an.format == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        for (auto& [key, value] : out.items())
          std::cout << key << " " << value.dump() << "\n";
      }
      return 0;
    }

    // verify / search
    for (const auto& [name, desc] : verify_claims)
      if (verify->get_subcommand(name)->parsed()) return run_verify_or_search(name, va);
    for (const auto& [name, desc] : search_claims)
      if (search->get_subcommand(name)->parsed()) return run_verify_or_search(name, va);

    std::cerr << "no subcommand\n";
    return 2;
  } catch (const io_failure& e) {
    std::cerr << "io error: " << e.what << "\n";
    return 3;
  } catch (const scale_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
