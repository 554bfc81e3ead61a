#include "exturan/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

namespace exturan {

namespace {

void check_solver_order(const Graph& g, int budget) {
  if (budget > kMaxSolverOrder) budget = kMaxSolverOrder;
  if (g.order() > budget)
    throw scale_error("order " + std::to_string(g.order()) +
                      " exceeds the solver budget of " + std::to_string(budget));
}

std::uint32_t rebased_row(const Graph& g, int anchor, int v, int m) {
  std::uint64_t r = g.row64(v) >> anchor;
  return static_cast<std::uint32_t>(r & ((std::uint64_t{1} << m) - 1));
}

// Longest cycle via per-anchor subset DP. For each anchor (the minimum
// vertex of the cycle), vertices are rebased so the anchor is bit 0 and
// dp[mask] holds the endpoints e with a simple anchor->e path covering
// mask u {anchor}. A cycle closes when an endpoint is adjacent to the
// anchor. Returns as soon as best >= stop_at.
int longest_cycle(const Graph& g, int stop_at) {
  const int n = g.order();
  int best = 0;
  if (n < 3) return 0;

  thread_local std::vector<std::uint32_t> dp;
  for (int anchor = 0; anchor + 3 <= n; ++anchor) {
    const int m = n - anchor;
    if (m <= best) break;  // every later anchor allows only shorter cycles
    std::uint32_t arow[64];
    for (int i = 0; i < m; ++i) arow[i] = rebased_row(g, anchor, anchor + i, m);
    if (std::popcount(arow[0]) < 2) continue;

    const std::size_t space = std::size_t{1} << m;
    if (dp.size() < space) dp.resize(space);
    std::fill(dp.begin(), dp.begin() + space, 0);

    std::uint32_t starts = arow[0];
    while (starts) {
      int e = std::countr_zero(starts);
      starts &= starts - 1;
      dp[std::uint32_t{1} << e] = std::uint32_t{1} << e;
    }

    for (std::uint32_t mask = 1; mask < space; ++mask) {
      if (mask & 1) continue;  // bit 0 is the implicit anchor
      std::uint32_t ends = dp[mask];
      if (!ends) continue;
      const int len = std::popcount(mask) + 1;
      if (len >= 3 && (ends & arow[0])) {
        if (len > best) {
          best = len;
          if (best >= stop_at) return best;
          if (best == m) break;  // Hamiltonian on the allowed set
        }
      }
      while (ends) {
        int e = std::countr_zero(ends);
        ends &= ends - 1;
        std::uint32_t ext = arow[e] & ~mask & ~std::uint32_t{1};
        while (ext) {
          int w = std::countr_zero(ext);
          ext &= ext - 1;
          dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
  }
  return best;
}

// Longest path DP over all start vertices (start = u restricts the source;
// goal >= 0 restricts which endpoint counts). Returns the best vertex count,
// early-exiting once it reaches stop_at.
int longest_path_dp(const Graph& g, int start, int goal, int stop_at) {
  const int n = g.order();
  if (n == 0) return 0;
  int best = 0;

  thread_local std::vector<std::uint32_t> dp;
  const std::size_t space = std::size_t{1} << n;
  if (dp.size() < space) dp.resize(space);
  std::fill(dp.begin(), dp.begin() + space, 0);

  if (start >= 0) {
    dp[std::uint32_t{1} << start] = std::uint32_t{1} << start;
  } else {
    for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  }
  const std::uint32_t goal_bit = goal >= 0 ? std::uint32_t{1} << goal : 0;

  for (std::uint32_t mask = 1; mask < space; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    if (goal < 0 || (ends & goal_bit)) {
      int len = std::popcount(mask);
      if (len > best) {
        best = len;
        if (best >= stop_at) return best;
      }
    }
    while (ends) {
      int e = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = static_cast<std::uint32_t>(g.row64(e)) & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return best;
}

// Depth-bounded DFS for a cycle of one exact length; cheap when len is
// small compared to the subset space.
bool exact_cycle_dfs(const Graph& g, int anchor, int len, int v, int depth,
                     std::uint64_t visited, std::uint64_t allowed) {
  if (depth == len) return g.has_edge(v, anchor);
  std::uint64_t avail = allowed & ~visited;
  if (std::popcount(avail) < len - depth) return false;
  std::uint64_t cand = g.row64(v) & avail;
  while (cand) {
    int w = std::countr_zero(cand);
    cand &= cand - 1;
    if (exact_cycle_dfs(g, anchor, len, w, depth + 1,
                        visited | (std::uint64_t{1} << w), allowed))
      return true;
  }
  return false;
}

}  // namespace

int circumference(const Graph& g, int budget) {
  check_solver_order(g, budget);
  return longest_cycle(g, g.order() + 1);
}

bool has_cycle_at_least(const Graph& g, int L, int budget) {
  check_solver_order(g, budget);
  if (L > g.order()) return false;
  return longest_cycle(g, std::max(L, 3)) >= L;
}

bool has_cycle_of_length(const Graph& g, int len, int budget) {
  check_solver_order(g, budget);
  if (len < 3 || len > g.order()) return false;
  const int n = g.order();
  for (int anchor = 0; anchor + len <= n; ++anchor) {
    std::uint64_t allowed = 0;
    for (int v = anchor + 1; v < n; ++v) allowed |= std::uint64_t{1} << v;
    if (exact_cycle_dfs(g, anchor, len, anchor, 1, 0, allowed)) return true;
  }
  return false;
}

int longest_path_order(const Graph& g, int budget) {
  check_solver_order(g, budget);
  return longest_path_dp(g, -1, -1, g.order() + 1);
}

bool has_path_on(const Graph& g, int k, int budget) {
  check_solver_order(g, budget);
  if (k > g.order()) return false;
  if (k <= 0) return true;
  return longest_path_dp(g, -1, -1, k) >= k;
}

int longest_path_between(const Graph& g, int u, int v, int target, int budget) {
  check_solver_order(g, budget);
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw domain_error("longest_path_between requires two distinct vertices");
  return longest_path_dp(g, u, v, target > 0 ? target : g.order() + 1);
}

CoreTrace core(const Graph& g, int alpha) { return core(g, alpha, {}); }

CoreTrace core(const Graph& g, int alpha, const std::vector<int>& priority) {
  if (alpha < 0) throw domain_error("core requires alpha >= 0");
  const int n = g.order();
  if (!priority.empty() && static_cast<int>(priority.size()) != n)
    throw domain_error("priority must cover every vertex");

  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  CoreTrace trace;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || deg[v] > alpha) continue;
      bool better = pick < 0 || (!priority.empty() &&
                                 (priority[v] < priority[pick] ||
                                  (priority[v] == priority[pick] && v < pick)));
      if (better) pick = v;
    }
    if (pick < 0) break;
    trace.deletion_order.emplace_back(pick, deg[pick]);
    alive[pick] = 0;
    g.for_neighbors(pick, [&](int u) {
      if (alive[u]) --deg[u];
    });
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) trace.surviving.push_back(v);
  return trace;
}

BipartiteGraph closure_long_cycle(const BipartiteGraph& g, int L) {
  const int order = g.graph.order();
  if (has_cycle_at_least(g.graph, L, std::max(kDefaultSolverBudget, order)))
    throw domain_error("input already contains a cycle of length >= L");

  BipartiteGraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < order && !changed; ++u) {
      if (!out.in_x(u)) continue;
      for (int v = 0; v < order && !changed; ++v) {
        if (out.in_x(v) || out.graph.has_edge(u, v)) continue;
        // Adding uv creates a cycle of length >= L iff a u-v path on >= L
        // vertices exists; closable pairs stay non-adjacent.
        if (longest_path_between(out.graph, u, v, L,
                                 std::max(kDefaultSolverBudget, order)) < L) {
          out.graph.add_edge(u, v);
          changed = true;
        }
      }
    }
  }
  return out;
}

namespace {

template <class InX>
int max_matching_impl(const Graph& g, InX in_x) {
  const int n = g.order();
  std::vector<int> match(n, -1);
  std::vector<int> stamp(n, -1);
  int round = 0;

  std::function<bool(int)> try_augment = [&](int x) -> bool {
    bool found = false;
    g.for_neighbors(x, [&](int y) {
      if (found || stamp[y] == round) return;
      stamp[y] = round;
      if (match[y] < 0 || try_augment(match[y])) {
        match[y] = x;
        match[x] = y;
        found = true;
      }
    });
    return found;
  };

  int size = 0;
  for (int x = 0; x < n; ++x) {
    if (!in_x(x) || match[x] >= 0) continue;
    ++round;
    if (try_augment(x)) ++size;
  }
  return size;
}

}  // namespace

int max_matching(const BipartiteGraph& g) {
  return max_matching_impl(g.graph, [&](int v) { return g.in_x(v); });
}

int max_matching(const Graph& g, int nx) {
  return max_matching_impl(g, [nx](int v) { return v < nx; });
}

namespace {

int path_degree(const Graph& g, const std::vector<std::uint64_t>& pmask, int v) {
  const std::uint64_t* r = g.row(v);
  int d = 0;
  for (std::size_t w = 0; w < pmask.size(); ++w)
    d += std::popcount(r[w] & pmask[w]);
  return d;
}

std::vector<std::uint64_t> path_mask(const Graph& g, const PathView& p) {
  std::vector<std::uint64_t> mask(g.words_per_row(), 0);
  for (int v : p.vertices) mask[v >> 6] |= std::uint64_t{1} << (v & 63);
  return mask;
}

}  // namespace

int posa_bound(const Graph& g, const PathView& p) {
  if (!is_valid_path(g, p)) throw domain_error("posa_bound: invalid path");
  auto mask = path_mask(g, p);
  const int m = static_cast<int>(p.vertices.size());
  const int dx = path_degree(g, mask, p.vertices.front());
  const int dy = path_degree(g, mask, p.vertices.back());
  return std::min(m, dx + dy);
}

int bipartite_posa_bound(const BipartiteGraph& g, const PathView& p) {
  if (!is_valid_path(g.graph, p)) throw domain_error("bipartite_posa_bound: invalid path");
  auto mask = path_mask(g.graph, p);
  const int m = static_cast<int>(p.vertices.size());
  const int u = p.vertices.front();
  const int v = p.vertices.back();
  const int du = path_degree(g.graph, mask, u);
  const int dv = path_degree(g.graph, mask, v);
  if (g.in_x(u) != g.in_x(v)) return std::min(m, 2 * (du + dv - 1));
  return std::min(m - 1, 2 * (du + dv - 2));
}

}  // namespace exturan
