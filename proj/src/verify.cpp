#include "exturan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "exturan/constructions.hpp"
#include "exturan/counting.hpp"
#include "exturan/structure.hpp"

namespace exturan {

std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::CB: return "CB";
    case Claim::PB: return "PB";
    case Claim::MB: return "MB";
    case Claim::C: return "C";
    case Claim::P: return "P";
    case Claim::jackson_exbip: return "jackson_exbip";
    case Claim::li_ning_exbip: return "li_ning_exbip";
    case Claim::wang_matching: return "wang_matching";
    case Claim::adamus_edges: return "adamus_edges";
    case Claim::conj_41: return "conj_41";
  }
  return "?";
}

std::optional<Claim> claim_from_name(std::string_view name) {
  for (Claim c : {Claim::CB, Claim::PB, Claim::MB, Claim::C, Claim::P,
                  Claim::jackson_exbip, Claim::li_ning_exbip, Claim::wang_matching,
                  Claim::adamus_edges, Claim::conj_41})
    if (name == claim_name(c)) return c;
  return std::nullopt;
}

std::uint64_t enumeration_budget(const GraphClassSpec& spec) {
  if (spec.budget > 0) return spec.budget;
  if (const char* env = std::getenv("EXTURAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 26;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

struct Universe {
  int order = 0;
  int nx = 0;  // X-part size; 0 for general mode
  std::vector<std::pair<int, int>> edges;
};

Universe make_universe(const GraphClassSpec& spec) {
  Universe u;
  if (spec.mode == ClassMode::bipartite) {
    require(spec.n >= 0 && spec.b >= 0, "part sizes must be >= 0");
    u.order = spec.n + spec.b;
    u.nx = spec.n;
    for (int x = 0; x < spec.n; ++x)
      for (int y = spec.n; y < spec.n + spec.b; ++y) u.edges.emplace_back(x, y);
  } else {
    require(spec.n >= 0, "order must be >= 0");
    u.order = spec.n;
    for (int v = 1; v < spec.n; ++v)
      for (int uu = 0; uu < v; ++uu) u.edges.emplace_back(uu, v);
  }
  return u;
}

void fill_from_mask(Graph& g, const Universe& uni, std::uint64_t mask) {
  g.clear_edges();
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    g.add_edge(uni.edges[e].first, uni.edges[e].second);
  }
}

void fill_from_rng(Graph& g, const Universe& uni, std::uint64_t seed, std::uint64_t sample) {
  g.clear_edges();
  const std::size_t nedges = uni.edges.size();
  const std::uint64_t words = (nedges + 63) / 64;
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < nedges; ++i) {
    if (i % 64 == 0) w = rng_word(seed, sample * words + i / 64);
    if ((w >> (i % 64)) & 1) g.add_edge(uni.edges[i].first, uni.edges[i].second);
  }
}

bool passes_filter(const Graph& g, const GraphClassSpec& spec) {
  if (spec.min_degree > 0)
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) < spec.min_degree) return false;
  if (spec.biconnected) return is_biconnected(g);
  if (spec.connected && !is_connected(g)) return false;
  return true;
}

struct Conclusion {
  enum class Kind { cycle_at_least, path_on, matching_at_least, cycle_exact };
  Kind kind;
  int value;
};

bool conclusion_holds(const Graph& g, int nx, const Conclusion& c) {
  const int budget = std::max(kDefaultSolverBudget, g.order());
  switch (c.kind) {
    case Conclusion::Kind::cycle_at_least:
      return has_cycle_at_least(g, c.value, budget);
    case Conclusion::Kind::path_on:
      return has_path_on(g, c.value, budget);
    case Conclusion::Kind::matching_at_least:
      return max_matching(g, nx) >= c.value;
    case Conclusion::Kind::cycle_exact:
      return has_cycle_of_length(g, c.value, budget);
  }
  return false;
}

struct ClaimPlan {
  CopyCount threshold;
  Conclusion conclusion{Conclusion::Kind::cycle_at_least, 0};
  std::optional<Conclusion> secondary;
  GraphClassSpec expected;  // hypothesis shape the class must match
  std::vector<Graph> seed_graphs;
};

GraphClassSpec bip_class(int n, int b, bool connected, int min_deg) {
  GraphClassSpec s;
  s.mode = ClassMode::bipartite;
  s.n = n;
  s.b = b;
  s.connected = connected;
  s.min_degree = min_deg;
  return s;
}

GraphClassSpec gen_class(int n, bool connected, bool biconnected, int min_deg) {
  GraphClassSpec s;
  s.n = n;
  s.connected = connected;
  s.biconnected = biconnected;
  s.min_degree = min_deg;
  return s;
}

void add_f_seed(std::vector<Graph>& seeds, int b, int n, int kslot, int a) {
  try {
    seeds.push_back(build_F(b, n, kslot, a, /*check=*/false).bip.graph);
  } catch (const domain_error&) {
  }
}

void add_h_seed(std::vector<Graph>& seeds, int n, int kslot, int a) {
  try {
    seeds.push_back(build_H(n, kslot, a, /*check=*/false).graph);
  } catch (const domain_error&) {
  }
}

// The edge-extremal long-cycle-free bipartite graph: k+1 X-vertices of
// degree one on a common Y-vertex, the other n-k-1 X-vertices complete to Y.
Graph jackson_seed(int b, int n, int k) {
  Graph g(n + b);
  for (int x = 0; x <= k && x < n; ++x) g.add_edge(x, n);
  for (int x = k + 1; x < n; ++x)
    for (int y = n; y < n + b; ++y) g.add_edge(x, y);
  return g;
}

// n-k-1 X-vertices complete to Y, everything else isolated; its maximum
// matching is n-k-1.
Graph wang_seed(int n, int k) {
  Graph g(2 * n);
  for (int x = 0; x + k + 1 < n; ++x)
    for (int y = n; y < 2 * n; ++y) g.add_edge(x, y);
  return g;
}

ClaimPlan make_plan(Claim claim, const BoundParams& p) {
  ClaimPlan plan;
  const int cyc_bip = 2 * (p.n - p.k);
  switch (claim) {
    case Claim::CB: {
      plan.threshold = threshold_cycle_bipartite(p);
      plan.conclusion = {Conclusion::Kind::cycle_at_least, cyc_bip};
      plan.expected = bip_class(p.n, p.b, true, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k, (p.n - p.k) / 2);
      break;
    }
    case Claim::PB:
    case Claim::MB: {
      plan.threshold = threshold_path_bipartite(p);
      plan.conclusion = claim == Claim::PB
                            ? Conclusion{Conclusion::Kind::path_on, cyc_bip}
                            : Conclusion{Conclusion::Kind::matching_at_least, p.n - p.k};
      plan.expected = bip_class(p.n, p.b, true, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k + 1, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k + 1, (p.n - p.k - 1) / 2);
      break;
    }
    case Claim::C: {
      plan.threshold = threshold_cycle_general(p);
      plan.conclusion = {Conclusion::Kind::cycle_at_least, p.k};
      plan.expected = gen_class(p.n, true, true, p.r);
      add_h_seed(plan.seed_graphs, p.n, p.k, p.r);
      add_h_seed(plan.seed_graphs, p.n, p.k, (p.k - 1) / 2);
      break;
    }
    case Claim::P: {
      plan.threshold = threshold_path_general(p);
      plan.conclusion = {Conclusion::Kind::path_on, p.k};
      plan.expected = gen_class(p.n, true, false, p.r);
      add_h_seed(plan.seed_graphs, p.n, p.k - 1, p.r);
      add_h_seed(plan.seed_graphs, p.n, p.k - 1, (p.k - 2) / 2);
      break;
    }
    case Claim::jackson_exbip:
    case Claim::li_ning_exbip: {
      require(p.s == 1 && p.t == 1, "edge baselines use s = t = 1");
      require(p.b >= p.n && p.n - p.k >= p.n / 2 + 1 && p.k >= 0,
              "requires b >= n >= n-k >= n/2+1");
      plan.threshold = CopyCount(p.n - p.k - 1) * p.b + p.k + 1;
      plan.conclusion = {claim == Claim::jackson_exbip ? Conclusion::Kind::cycle_at_least
                                                       : Conclusion::Kind::cycle_exact,
                         cyc_bip};
      plan.expected = bip_class(p.n, p.b, false, 0);
      plan.seed_graphs.push_back(jackson_seed(p.b, p.n, p.k));
      break;
    }
    case Claim::wang_matching: {
      require(p.b == p.n, "wang_matching is a balanced-bipartite statement");
      require(p.k >= 0 && p.n - p.k - 1 >= 0, "requires 0 <= k <= n-1");
      require(p.s >= 1 && p.t >= 1, "requires s >= 1 and t >= 1");
      plan.threshold =
          p.s == p.t ? binomial(p.n - p.k - 1, p.s) * binomial(p.n, p.s)
                     : binomial(p.n - p.k - 1, p.s) * binomial(p.n, p.t) +
                           binomial(p.n - p.k - 1, p.t) * binomial(p.n, p.s);
      plan.conclusion = {Conclusion::Kind::matching_at_least, p.n - p.k};
      plan.expected = bip_class(p.n, p.n, false, 0);
      plan.seed_graphs.push_back(wang_seed(p.n, p.k));
      break;
    }
    case Claim::adamus_edges: {
      require(p.b == p.n, "adamus_edges concerns balanced bipartite graphs");
      require(p.s == 1 && p.t == 1, "adamus_edges is an edge bound (s = t = 1)");
      plan.threshold = eval_f(p.n, p.n, p.n - p.k, p.r, 1, 1);
      plan.conclusion = {Conclusion::Kind::cycle_exact, cyc_bip};
      plan.expected = bip_class(p.n, p.n, true, p.r);
      add_f_seed(plan.seed_graphs, p.n, p.n, p.k, p.r);
      break;
    }
    case Claim::conj_41: {
      plan.threshold = threshold_cycle_bipartite(p);
      plan.conclusion = {Conclusion::Kind::cycle_exact, cyc_bip};
      plan.secondary = Conclusion{Conclusion::Kind::cycle_at_least, cyc_bip};
      plan.expected = bip_class(p.n, p.b, true, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k, p.r);
      add_f_seed(plan.seed_graphs, p.b, p.n, p.k, (p.n - p.k) / 2);
      break;
    }
  }
  return plan;
}

void check_spec_matches(const GraphClassSpec& spec, const GraphClassSpec& expected) {
  require(spec.mode == expected.mode, "class mode does not match the claim's hypotheses");
  require(spec.n == expected.n && (spec.mode == ClassMode::general || spec.b == expected.b),
          "class part sizes do not match the claim parameters");
  require(spec.connected == expected.connected && spec.biconnected == expected.biconnected,
          "class connectivity constraints do not match the claim's hypotheses");
  require(spec.min_degree == expected.min_degree,
          "class minimum degree does not match the claim's r");
}

constexpr std::size_t kWitnessCap = 8;

// Shards are contiguous blocks of the enumeration space (the first w item
// bits fixed). The width is a pure tuning knob: results are identical for
// any width and any jobs value.
std::uint64_t shard_size() {
  if (const char* env = std::getenv("EXTURAN_SHARD_BITS")) {
    char* end = nullptr;
    unsigned long long bits = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && bits <= 30) return std::uint64_t{1} << bits;
  }
  return std::uint64_t{1} << 14;
}

void add_witness(std::vector<std::string>& ws, std::string g6) {
  auto it = std::lower_bound(ws.begin(), ws.end(), g6);
  if (it != ws.end() && *it == g6) return;
  ws.insert(it, std::move(g6));
  if (ws.size() > kWitnessCap) ws.pop_back();
}

struct ShardAccum {
  std::uint64_t examined = 0;
  std::vector<std::string> violations;
  std::vector<std::string> violations_secondary;
  bool has_fail = false;
  CopyCount max_fail;
  std::vector<std::string> witnesses;
};

struct SweepSetup {
  GraphClassSpec spec;
  Universe uni;
  int s = 1, t = 1;
  CopyCount threshold;
  Conclusion conclusion{Conclusion::Kind::cycle_at_least, 0};
  std::optional<Conclusion> secondary;
  std::optional<CopyCount> floor;  // verified lower bound on the extremal value
  bool u64_path = false;
  std::uint64_t thr_u64 = 0;
  std::uint64_t total_items = 0;
};

// One contiguous block of the enumeration space. Pruning rule: a graph can
// be skipped without solving its conclusion iff its count is both below the
// shard's running extremal and not above the threshold; such a graph can
// neither be a violation nor contribute an extremal witness.
ShardAccum run_shard(const SweepSetup& sw, std::uint64_t begin, std::uint64_t end) {
  ShardAccum acc;
  if (sw.floor) {
    acc.has_fail = true;
    acc.max_fail = *sw.floor;
  }
  std::uint64_t floor64 = 0;
  if (sw.u64_path && sw.floor) floor64 = static_cast<std::uint64_t>(*sw.floor);
  std::uint64_t max64 = floor64;

  Graph g(sw.uni.order);
  const bool random = sw.spec.enumeration == Enumeration::random;
  for (std::uint64_t item = begin; item < end; ++item) {
    if (random)
      fill_from_rng(g, sw.uni, sw.spec.seed, item);
    else
      fill_from_mask(g, sw.uni, item);
    if (!passes_filter(g, sw.spec)) continue;
    ++acc.examined;

    std::uint64_t n64 = 0;
    CopyCount nbig;
    bool above;
    if (sw.u64_path) {
      n64 = detail::count_kst_u64(g, sw.s, sw.t);
      above = n64 > sw.thr_u64;
    } else {
      nbig = count_kst(g, sw.s, sw.t);
      above = nbig > sw.threshold;
    }

    if (!above && acc.has_fail) {
      if (sw.u64_path ? n64 < max64 : nbig < acc.max_fail) continue;
    }

    const bool ok = conclusion_holds(g, sw.uni.nx, sw.conclusion);
    if (above && !ok) {
      acc.violations.push_back(encode_graph6(g));
    }
    if (above && sw.secondary && !conclusion_holds(g, sw.uni.nx, *sw.secondary)) {
      acc.violations_secondary.push_back(encode_graph6(g));
    }
    if (!ok) {
      CopyCount n = sw.u64_path ? CopyCount(n64) : nbig;
      if (!acc.has_fail || n > acc.max_fail) {
        acc.has_fail = true;
        acc.max_fail = n;
        if (sw.u64_path) max64 = n64;
        acc.witnesses.clear();
        add_witness(acc.witnesses, encode_graph6(g));
      } else if (n == acc.max_fail) {
        add_witness(acc.witnesses, encode_graph6(g));
      }
    }
  }
  return acc;
}

VerifyReport run_sweep(Claim claim, const BoundParams& p, const GraphClassSpec& spec,
                       const ClaimPlan& plan, int jobs) {
  SweepSetup sw;
  sw.spec = spec;
  sw.uni = make_universe(spec);
  sw.s = p.s;
  sw.t = p.t;
  sw.threshold = plan.threshold;
  sw.conclusion = plan.conclusion;
  sw.secondary = plan.secondary;

  const std::size_t nedges = sw.uni.edges.size();
  if (spec.enumeration == Enumeration::exhaustive) {
    const std::uint64_t budget = enumeration_budget(spec);
    if (nedges >= 63 || (std::uint64_t{1} << nedges) > budget)
      throw scale_error("exhaustive class has 2^" + std::to_string(nedges) +
                        " edge subsets, exceeding the budget of " + std::to_string(budget));
    sw.total_items = std::uint64_t{1} << nedges;
  } else {
    require(spec.sample_count > 0, "random mode requires a sample count");
    sw.total_items = spec.sample_count;
  }

  sw.u64_path = detail::u64_kernel_fits(sw.uni.order, p.s, p.t);
  if (sw.u64_path) {
    CopyCount bound = binomial(sw.uni.order, p.s) * binomial(sw.uni.order, p.t);
    sw.thr_u64 = sw.threshold > bound ? std::numeric_limits<std::uint64_t>::max()
                                      : static_cast<std::uint64_t>(sw.threshold);
  }

  // Extremal floor: a claim-specific construction that is in class and fails
  // the conclusion gives a verified lower bound, letting shards skip the
  // conclusion solve for everything strictly below it. Exhaustive mode only:
  // a random sample might never hit the construction.
  if (spec.enumeration == Enumeration::exhaustive) {
    for (const Graph& seed : plan.seed_graphs) {
      if (seed.order() != sw.uni.order) continue;
      if (!passes_filter(seed, spec)) continue;
      if (conclusion_holds(seed, sw.uni.nx, sw.conclusion)) continue;
      CopyCount value = count_kst(seed, p.s, p.t);
      if (!sw.floor || value > *sw.floor) sw.floor = value;
    }
  }

  const std::uint64_t block = shard_size();
  const std::uint64_t nshards = (sw.total_items + block - 1) / block;
  std::vector<ShardAccum> results(nshards);
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(nshards, 64))));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < nshards; ++i)
      results[i] = run_shard(sw, i * block, std::min(sw.total_items, (i + 1) * block));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= nshards) break;
            results[i] = run_shard(sw, i * block, std::min(sw.total_items, (i + 1) * block));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Pure associative fold in shard order; the final lists are then sorted
  // so output does not depend on shard decomposition at all.
  VerifyReport rep;
  rep.claim = claim;
  rep.params = p;
  rep.spec = spec;
  rep.threshold = plan.threshold;
  bool has_fail = false;
  CopyCount max_fail;
  std::vector<std::string> witnesses;
  for (const ShardAccum& r : results) {
    rep.class_size += r.examined;
    rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
    rep.violations_at_least.insert(rep.violations_at_least.end(),
                                   r.violations_secondary.begin(),
                                   r.violations_secondary.end());
    if (!r.has_fail) continue;
    if (!has_fail || r.max_fail > max_fail) {
      has_fail = true;
      max_fail = r.max_fail;
      witnesses = r.witnesses;
    } else if (r.max_fail == max_fail) {
      for (const std::string& w : r.witnesses) add_witness(witnesses, w);
    }
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                       rep.violations.end());
  std::sort(rep.violations_at_least.begin(), rep.violations_at_least.end());
  rep.violations_at_least.erase(
      std::unique(rep.violations_at_least.begin(), rep.violations_at_least.end()),
      rep.violations_at_least.end());
  std::sort(witnesses.begin(), witnesses.end());
  if (witnesses.size() > kWitnessCap) witnesses.resize(kWitnessCap);
  if (has_fail) {
    rep.extremal_value = max_fail;
    rep.tight = max_fail == plan.threshold;
    rep.extremal_witnesses = std::move(witnesses);
  }
  if (rep.tight && rep.extremal_witnesses.empty())
    throw internal_error("tight report without an extremal witness");
  return rep;
}

}  // namespace

std::uint64_t enumerate_class(const GraphClassSpec& spec,
                              const std::function<void(const Graph&)>& fn) {
  Universe uni = make_universe(spec);
  const std::size_t nedges = uni.edges.size();
  std::uint64_t total;
  if (spec.enumeration == Enumeration::exhaustive) {
    const std::uint64_t budget = enumeration_budget(spec);
    if (nedges >= 63 || (std::uint64_t{1} << nedges) > budget)
      throw scale_error("exhaustive class has 2^" + std::to_string(nedges) +
                        " edge subsets, exceeding the budget of " + std::to_string(budget));
    total = std::uint64_t{1} << nedges;
  } else {
    require(spec.sample_count > 0, "random mode requires a sample count");
    total = spec.sample_count;
  }
  Graph g(uni.order);
  std::uint64_t count = 0;
  for (std::uint64_t item = 0; item < total; ++item) {
    if (spec.enumeration == Enumeration::random)
      fill_from_rng(g, uni, spec.seed, item);
    else
      fill_from_mask(g, uni, item);
    if (!passes_filter(g, spec)) continue;
    ++count;
    if (fn) fn(g);
  }
  return count;
}

VerifyReport verify_theorem(Claim claim, const BoundParams& p, const GraphClassSpec& spec,
                            int jobs) {
  require(claim == Claim::CB || claim == Claim::PB || claim == Claim::MB ||
              claim == Claim::C || claim == Claim::P,
          "verify_theorem handles claims CB, PB, MB, C, P");
  ClaimPlan plan = make_plan(claim, p);
  check_spec_matches(spec, plan.expected);
  return run_sweep(claim, p, spec, plan, jobs);
}

VerifyReport verify_baseline(Claim claim, const BoundParams& p, const GraphClassSpec& spec,
                             int jobs) {
  require(claim == Claim::jackson_exbip || claim == Claim::li_ning_exbip ||
              claim == Claim::wang_matching,
          "verify_baseline handles jackson_exbip, li_ning_exbip, wang_matching");
  ClaimPlan plan = make_plan(claim, p);
  check_spec_matches(spec, plan.expected);
  return run_sweep(claim, p, spec, plan, jobs);
}

VerifyReport search_conjecture(Claim claim, const BoundParams& p, const GraphClassSpec& spec,
                               int jobs) {
  require(claim == Claim::adamus_edges || claim == Claim::conj_41,
          "search_conjecture handles adamus_edges and conj_41");
  ClaimPlan plan = make_plan(claim, p);
  check_spec_matches(spec, plan.expected);
  return run_sweep(claim, p, spec, plan, jobs);
}

VerifyReport sweep_with_threshold(Claim claim, const BoundParams& p,
                                  const GraphClassSpec& spec, const CopyCount& threshold,
                                  int jobs) {
  ClaimPlan plan = make_plan(claim, p);
  check_spec_matches(spec, plan.expected);
  plan.threshold = threshold;
  plan.seed_graphs.clear();  // the stock floor may be invalid for a custom threshold
  return run_sweep(claim, p, spec, plan, jobs);
}

bool reverify_report(const VerifyReport& rep) {
  ClaimPlan plan = make_plan(rep.claim, rep.params);
  Universe uni = make_universe(rep.spec);
  auto check_one = [&](const std::string& g6, bool want_above, bool exact_value,
                       const Conclusion& concl) {
    Graph g = decode_graph6(g6);
    if (g.order() != uni.order) return false;
    if (!passes_filter(g, rep.spec)) return false;
    CopyCount n = count_kst(g, rep.params.s, rep.params.t);
    if (want_above && !(n > rep.threshold)) return false;
    if (exact_value && (!rep.extremal_value || n != *rep.extremal_value)) return false;
    return !conclusion_holds(g, uni.nx, concl);
  };
  for (const std::string& g6 : rep.violations)
    if (!check_one(g6, true, false, plan.conclusion)) return false;
  for (const std::string& g6 : rep.extremal_witnesses)
    if (!check_one(g6, false, true, plan.conclusion)) return false;
  if (plan.secondary)
    for (const std::string& g6 : rep.violations_at_least)
      if (!check_one(g6, true, false, *plan.secondary)) return false;
  return true;
}

std::string canonical_signature(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw scale_error("canonical_signature is limited to order <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t bits = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        bits = (bits << 1) | (g.has_edge(perm[u], perm[v]) ? 1 : 0);
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + std::to_string(best);
}

void dedupe_isomorphic(std::vector<std::string>& graph6_list) {
  std::sort(graph6_list.begin(), graph6_list.end());
  std::vector<std::string> kept, sigs;
  for (const std::string& g6 : graph6_list) {
    std::string sig = canonical_signature(decode_graph6(g6));
    if (std::find(sigs.begin(), sigs.end(), sig) == sigs.end()) {
      sigs.push_back(sig);
      kept.push_back(g6);
    }
  }
  graph6_list = std::move(kept);
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim_name(claim);
  j["params"] = {{"b", params.b}, {"n", params.n}, {"k", params.k},
                 {"r", params.r}, {"s", params.s}, {"t", params.t}};
  nlohmann::ordered_json cls;
  cls["mode"] = spec.mode == ClassMode::bipartite ? "bipartite" : "general";
  cls["n"] = spec.n;
  cls["b"] = spec.b;
  cls["connected"] = spec.connected;
  cls["biconnected"] = spec.biconnected;
  cls["min_degree"] = spec.min_degree;
  cls["enumeration"] = spec.enumeration == Enumeration::exhaustive ? "exhaustive" : "random";
  cls["sample_count"] = spec.sample_count;
  j["class"] = cls;
  j["class_size"] = class_size;
  j["threshold"] = to_decimal(threshold);
  j["violations"] = violations;
  if (claim == Claim::conj_41) j["violations_at_least"] = violations_at_least;
  j["extremal_value"] =
      extremal_value ? nlohmann::ordered_json(to_decimal(*extremal_value))
                     : nlohmann::ordered_json(nullptr);
  j["tight"] = tight;
  j["witnesses"] = extremal_witnesses;
  j["seed"] = spec.enumeration == Enumeration::random ? nlohmann::ordered_json(spec.seed)
                                                      : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_csv() const {
  std::string head =
      "claim,mode,b,n,k,r,s,t,class_size,threshold,extremal_value,tight,violations,seed\n";
  std::string row;
  row += claim_name(claim);
  row += spec.mode == ClassMode::bipartite ? ",bipartite," : ",general,";
  row += std::to_string(params.b) + "," + std::to_string(params.n) + "," +
         std::to_string(params.k) + "," + std::to_string(params.r) + "," +
         std::to_string(params.s) + "," + std::to_string(params.t) + "," +
         std::to_string(class_size) + "," + to_decimal(threshold) + "," +
         (extremal_value ? to_decimal(*extremal_value) : "") + "," +
         (tight ? "true" : "false") + "," + std::to_string(violations.size()) + "," +
         (spec.enumeration == Enumeration::random ? std::to_string(spec.seed) : "");
  return head + row + "\n";
}

}  // namespace exturan
