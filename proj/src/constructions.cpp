#include "exturan/constructions.hpp"

#include <string>

#include "exturan/counting.hpp"
#include "exturan/formulas.hpp"
#include "exturan/structure.hpp"

namespace exturan {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

void assert_prop(bool cond, const std::string& what) {
  if (!cond) throw internal_error("construction property failed: " + what);
}

}  // namespace

FConstruction build_F(int b, int n, int k, int a, bool check) {
  require(n >= 1, "build_F requires n >= 1");
  require(b >= n, "build_F requires b >= n");
  require(k >= 0, "build_F requires k >= 0");
  require(a >= 1 && 2 * a <= n - k, "build_F requires floor((n-k)/2) >= a >= 1");
  require(a <= b, "build_F requires a <= b");

  const int size_a = k + a, size_b = n - k - a, size_c = a;
  Graph g(n + b);
  // X = A u B on 0..n-1, Y = C u D on n..n+b-1; A sees exactly C, B sees all of Y.
  for (int x = 0; x < size_a; ++x)
    for (int y = n; y < n + size_c; ++y) g.add_edge(x, y);
  for (int x = size_a; x < n; ++x)
    for (int y = n; y < n + b; ++y) g.add_edge(x, y);

  FConstruction f{make_bipartite(g, n, b), {}, b, n, k, a};
  f.region_of.resize(n + b);
  for (int v = 0; v < n + b; ++v)
    f.region_of[v] = v < size_a          ? Region::A
                     : v < n             ? Region::B
                     : v < n + size_c    ? Region::C
                                         : Region::D;

  if (check) {
    const Graph& fg = f.bip.graph;
    assert_prop(size_b >= 1 && is_connected(fg), "F is connected");
    if (n >= 2 * k + 2 * a) assert_prop(min_degree(fg) == a, "min degree equals a");
    for (int s = 1; s <= 2; ++s)
      assert_prop(count_kst(fg, s, s) == eval_f(b, n, n - k, a, s, s),
                  "K_{s,s} count matches f");
    assert_prop(count_kst(fg, 1, 2) ==
                    eval_f(b, n, n - k, a, 1, 2) + eval_f(b, n, n - k, a, 2, 1),
                "K_{1,2} count matches f_{1,2} + f_{2,1}");
    assert_prop(circumference(fg, std::max(kDefaultSolverBudget, n + b)) <=
                    2 * n - 2 * k - 2,
                "no cycle of length 2n-2k or more");
  }
  return f;
}

HConstruction build_H(int n, int k, int a, bool check) {
  require(n >= k, "build_H requires n >= k");
  require(k >= 3, "build_H requires k >= 3");
  require(a >= 1 && 2 * a < k, "build_H requires k/2 > a >= 1");

  const int size_a = a, size_b = n - k + a;
  Graph g(n);
  // A on 0..a-1, B next, C last; all A-B edges plus a clique on A u C.
  for (int x = 0; x < size_a; ++x)
    for (int y = size_a; y < size_a + size_b; ++y) g.add_edge(x, y);
  std::vector<int> clique;
  for (int v = 0; v < size_a; ++v) clique.push_back(v);
  for (int v = size_a + size_b; v < n; ++v) clique.push_back(v);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);

  HConstruction h{std::move(g), {}, n, k, a};
  h.region_of.resize(n);
  for (int v = 0; v < n; ++v)
    h.region_of[v] = v < size_a            ? Region::A
                     : v < size_a + size_b ? Region::B
                                           : Region::C;

  if (check) {
    assert_prop(is_connected(h.graph), "H is connected");
    assert_prop(is_biconnected(h.graph) == (a >= 2), "H is 2-connected iff a >= 2");
    for (int s = 1; s <= 2; ++s)
      assert_prop(count_kst(h.graph, s, s) == eval_g(n, k, a, s, s),
                  "K_{s,s} count matches g");
    assert_prop(count_kst(h.graph, 1, 2) == eval_g(n, k, a, 1, 2),
                "K_{1,2} count matches g_{1,2}");
    assert_prop(circumference(h.graph, std::max(kDefaultSolverBudget, n)) <= k - 1,
                "no cycle of length k or more");
  }
  return h;
}

}  // namespace exturan
