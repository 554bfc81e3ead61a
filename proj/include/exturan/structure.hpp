#pragma once

#include <utility>
#include <vector>

#include "exturan/graph.hpp"

namespace exturan {

inline constexpr int kDefaultSolverBudget = 18;
// Hard ceiling for the subset-DP cycle/path solvers (memory 2^order words).
inline constexpr int kMaxSolverOrder = 22;

// Result of iterated low-degree peeling: the surviving vertex set of the
// (alpha+1)-core together with a peeling witness.
struct CoreTrace {
  std::vector<int> surviving;                       // ascending vertex ids
  std::vector<std::pair<int, int>> deletion_order;  // (vertex, degree at deletion)
};

// Deletes vertices of degree <= alpha until the minimum degree of the rest
// exceeds alpha (possibly emptying the graph). The surviving set is the
// unique maximal subgraph with minimum degree >= alpha+1 regardless of
// peeling order; `priority`, when given, picks which eligible vertex is
// peeled first (lowest value wins) so tests can randomize the witness.
CoreTrace core(const Graph& g, int alpha);
CoreTrace core(const Graph& g, int alpha, const std::vector<int>& priority);

// Adds X-Y edges to g (which must have no cycle of length >= L) until any
// further cross edge would create one, scanning non-edges lexicographically
// and restarting after each addition. The result is edge-maximal: every
// remaining cross non-edge (u, v) has a connecting path on >= L vertices.
BipartiteGraph closure_long_cycle(const BipartiteGraph& g, int L);

// Exact longest-cycle length (edge count; 0 if acyclic) via per-anchor
// dynamic programming over vertex subsets. Throws scale_error when the
// order exceeds the budget; callers may raise it up to kMaxSolverOrder.
int circumference(const Graph& g, int budget = kDefaultSolverBudget);

// Decision variants with early exit once the target is met.
bool has_cycle_at_least(const Graph& g, int L, int budget = kDefaultSolverBudget);
bool has_cycle_of_length(const Graph& g, int len, int budget = kDefaultSolverBudget);

// Exact order (vertex count) of a longest path; 1 for a nonempty edgeless
// graph, 0 for the empty graph.
int longest_path_order(const Graph& g, int budget = kDefaultSolverBudget);
bool has_path_on(const Graph& g, int k, int budget = kDefaultSolverBudget);

// Exact vertex count of a longest u-v path (0 if v is unreachable from u).
// With target > 0, returns early with any value >= target once one is found.
int longest_path_between(const Graph& g, int u, int v, int target = 0,
                         int budget = kDefaultSolverBudget);

// Maximum matching size via augmenting-path search.
int max_matching(const BipartiteGraph& g);
// Contiguous-convention variant: X = 0..nx-1.
int max_matching(const Graph& g, int nx);

// min{|V(p)|, d_P(x) + d_P(y)} for the endpoints x, y of p, where d_P is
// the degree into V(p). Lower-bounds the circumference of 2-connected hosts.
int posa_bound(const Graph& g, const PathView& p);

// Bipartite analogue: min{|V(p)|, 2(d_P(u)+d_P(v)-1)} when the endpoints
// lie in different parts, min{|V(p)|-1, 2(d_P(u)+d_P(v)-2)} when they share
// a part.
int bipartite_posa_bound(const BipartiteGraph& g, const PathView& p);

}  // namespace exturan
