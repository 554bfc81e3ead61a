#pragma once

#include <vector>

#include "exturan/graph.hpp"

namespace exturan {

// Region labels of the extremal families. F partitions X = A u B and
// Y = C u D; H partitions the vertex set into A, B, C with A u C a clique.
enum class Region { A, B, C, D };

struct FConstruction {
  BipartiteGraph bip;
  std::vector<Region> region_of;
  int b, n, k, a;
};

struct HConstruction {
  Graph graph;
  std::vector<Region> region_of;
  int n, k, a;
};

// Bipartite extremal family: |A| = k+a, |B| = n-k-a, |C| = a, |D| = b-a,
// with N(x) = C for x in A and N(x) = Y for x in B. Vertices are laid out
// A, B, C, D in ascending labels; X = 0..n-1, Y = n..n+b-1.
// Requires b >= n >= 1, k >= 0, a <= b and 1 <= a <= floor((n-k)/2).
// With check set, the stated properties are asserted on return: region
// sizes, connectivity, minimum degree a when n >= 2k+2a, K_{s,t} counts
// equal to the f-formula for s,t <= 2, and circumference <= 2n-2k-2 (the
// last is exponential-time; bulk sweeps pass check = false and re-verify
// separately).
FConstruction build_F(int b, int n, int k, int a, bool check = true);

// General extremal family on n vertices: |A| = a, |B| = n-k+a, |C| = k-2a;
// all A-B edges plus a clique on A u C. Vertices are laid out A, B, C.
// Requires n >= k >= 3 and 1 <= a < k/2. With check set, asserts region
// sizes, circumference <= k-1, 2-connectivity exactly when a >= 2, and
// K_{s,t} counts equal to the g-formula for s,t <= 2.
HConstruction build_H(int n, int k, int a, bool check = true);

}  // namespace exturan
