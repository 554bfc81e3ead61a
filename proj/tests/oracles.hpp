#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here works from plain adjacency matrices and permutation or
// subset enumeration; none of it shares code with the implementation paths
// it validates.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "exturan/bigint.hpp"
#include "exturan/graph.hpp"

namespace oracle {

using AdjMatrix = std::vector<std::vector<int>>;

inline AdjMatrix to_matrix(const exturan::Graph& g) {
  const int n = g.order();
  AdjMatrix m(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m[u][v] = g.has_edge(u, v) ? 1 : 0;
  return m;
}

// Factorial-ratio binomial, exact via big integers.
inline exturan::CopyCount factorial_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  auto fact = [](int m) {
    exturan::CopyCount f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  return fact(n) / (fact(k) * fact(n - k));
}

// Reference graph6 encoder built directly from the format description:
// emit the size field, then the column-order upper triangle as a bit string,
// then pack six bits at a time adding 63.
inline std::string ref_graph6(const AdjMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::string bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(m[u][v] ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out;
  out.push_back(static_cast<char>(n + 63));  // callers stay below order 63
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int j = 0; j < 6; ++j) v = v * 2 + (bits[i + j] == '1');
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

// Longest cycle by brute force over vertex permutations: every cycle shows
// up as a prefix of some permutation.
inline int perm_longest_cycle(const AdjMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    bool path_ok = true;
    for (int len = 2; len <= n && path_ok; ++len) {
      path_ok = m[perm[len - 2]][perm[len - 1]] != 0;
      if (path_ok && len >= 3 && m[perm[len - 1]][perm[0]]) best = std::max(best, len);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int perm_longest_path(const AdjMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1;
  do {
    for (int len = 2; len <= n; ++len) {
      if (!m[perm[len - 2]][perm[len - 1]]) break;
      best = std::max(best, len);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Maximum matching by exhaustive search over edge subsets.
inline int brute_matching(const AdjMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (m[u][v]) edges.emplace_back(u, v);
  const int e = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << e); ++sub) {
    std::vector<int> used(n, 0);
    bool ok = true;
    int size = 0;
    for (int i = 0; i < e && ok; ++i) {
      if (!((sub >> i) & 1)) continue;
      auto [u, v] = edges[i];
      if (used[u] || used[v]) ok = false;
      used[u] = used[v] = 1;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Adjacency-matrix DFS connectivity, independent of the bitset BFS.
inline bool matrix_connected(const AdjMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n <= 1) return true;
  std::vector<int> stack{0}, seen(n, 0);
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (m[v][u] && !seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

// Test-input generator (splitmix64); inputs only, never an expected value.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline exturan::Graph random_graph(Rng& rng, int order, int density_pct = 50) {
  exturan::Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (rng.below(100) < density_pct) g.add_edge(u, v);
  return g;
}

inline exturan::Graph random_bipartite(Rng& rng, int nx, int ny, int density_pct = 50) {
  exturan::Graph g(nx + ny);
  for (int x = 0; x < nx; ++x)
    for (int y = nx; y < nx + ny; ++y)
      if (rng.below(100) < density_pct) g.add_edge(x, y);
  return g;
}

// Random simple path; with extend_fully set it is maximal, i.e. neither
// endpoint has a neighbor off the path.
inline exturan::PathView random_path(Rng& rng, const exturan::Graph& g, bool extend_fully) {
  exturan::PathView p;
  const int n = g.order();
  if (n == 0) return p;
  int v = rng.below(n);
  std::vector<int> seen(n, 0);
  std::deque<int> path{v};
  seen[v] = 1;
  auto grow = [&](bool front) {
    std::vector<int> options;
    g.for_neighbors(front ? path.front() : path.back(), [&](int u) {
      if (!seen[u]) options.push_back(u);
    });
    if (options.empty()) return false;
    int u = options[rng.below(static_cast<int>(options.size()))];
    if (front)
      path.push_front(u);
    else
      path.push_back(u);
    seen[u] = 1;
    return true;
  };
  for (;;) {
    if (!extend_fully && rng.below(4) == 0) break;
    bool grew = grow(false);
    grew = grow(true) || grew;
    if (!grew) break;
  }
  p.vertices.assign(path.begin(), path.end());
  return p;
}

}  // namespace oracle
