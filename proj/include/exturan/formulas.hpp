#pragma once

#include <functional>

#include "exturan/bigint.hpp"

namespace exturan {

// Parameter tuple shared by the theorem thresholds: b = Y-part size,
// n = X-part size (or total order for the general-graph theorems),
// k = shortfall, r = minimum-degree floor, (s, t) = pattern side sizes.
// The midpoint h is derived per theorem and not stored.
struct BoundParams {
  int b = 0;
  int n = 0;
  int k = 0;
  int r = 1;
  int s = 1;
  int t = 1;
};

// f_{s,t}(b, n, m, a) = C(b,s) C(m-a,t) + C(a,s) C(n,t) - C(a,s) C(m-a,t).
// The m slot carries n-k (cycle theorem) or n-k-1 (path/matching theorems).
CopyCount eval_f(int b, int n, int m, int a, int s, int t);

// g_{s,t}(n, k, a): the two-case sum with the clique term
//   s = t:   sum_{i=1}^{n-k+a} C(a,s) C(n-s-i, s-1) + (1/2) C(k-a, 2s) C(2s, s)
//   s != t:  sum_{i=1}^{n-k+a} [C(a,s) C(n-s-i, t-1) + C(a,t) C(n-t-i, s-1)]
//            + C(k-a, s+t) C(s+t, s)
// The halving in the s = t case is exact.
CopyCount eval_g(int n, int k, int a, int s, int t);

// Threshold of the long-cycle theorem for connected bipartite graphs:
// max over a in {r, h} of the f-branch at m = n-k, h = floor((n-k)/2);
// both orientations are summed when s != t.
CopyCount threshold_cycle_bipartite(const BoundParams& p);

// Path and matching variants: same structure at m = n-k-1 with
// h = floor((n-k-1)/2). The two thresholds coincide by definition.
CopyCount threshold_path_bipartite(const BoundParams& p);
CopyCount threshold_matching_bipartite(const BoundParams& p);

// General-graph thresholds: max{g(n,k,r), g(n,k,h)} with h = floor((k-1)/2)
// for the cycle theorem (n >= k >= 5, r >= 2), and the k-1 slot with
// h = floor((k-2)/2) for the path theorem (n >= k >= 4, r >= 1).
CopyCount threshold_cycle_general(const BoundParams& p);
CopyCount threshold_path_general(const BoundParams& p);

// True iff fn(a-1) + fn(a+1) >= 2 fn(a) for all lo < a < hi; certifies that
// a maximum over an integer interval is attained at an endpoint.
bool check_discrete_convexity(const std::function<CopyCount(int)>& fn, int lo, int hi);

}  // namespace exturan
