#pragma once

#include "exturan/bigint.hpp"
#include "exturan/graph.hpp"

namespace exturan {

// Exact C(n, k). Returns 0 when k < 0 or k > n; throws on n < 0.
CopyCount binomial(long long n, long long k);

// Number of unordered copies of K_{s,t} as a (not necessarily induced)
// subgraph of g: unordered pairs {S, T} of disjoint vertex sets, |S| = s,
// |T| = t, with every S-T pair adjacent. Edges inside S or T are ignored.
// For s = t each copy is counted once; for s != t both orientations are
// distinct set pairs and are both included.
//
// Enumerates s-subsets in lexicographic order, intersecting neighborhood
// bitsets to get each common neighborhood (automatically disjoint from S
// since the graph has no self-loops), then adds C(|W(S)|, t); the s = t
// ordered total is halved exactly.
CopyCount count_kst(const Graph& g, int s, int t);

// Same contract as count_kst, computed by naive enumeration of all (S, T)
// set pairs with no neighborhood-intersection shortcuts. Exists solely to
// cross-validate count_kst; restricted to order <= 12.
CopyCount count_kst_oracle(const Graph& g, int s, int t);

namespace detail {
// Single-word kernel used by sweeps; valid when order <= 64, s,t <= 8, and
// C(order, s) * C(order, t) fits in 64 bits (the caller certifies this).
std::uint64_t count_kst_u64(const Graph& g, int s, int t);
// True iff the kernel above is safe for (order, s, t).
bool u64_kernel_fits(int order, int s, int t);
}  // namespace detail

}  // namespace exturan
