#include "exturan/formulas.hpp"

#include <algorithm>
#include <string>

#include "exturan/counting.hpp"
#include "exturan/errors.hpp"

namespace exturan {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

// Branch value at a given a, both orientations summed when s != t.
CopyCount f_branch(int b, int n, int m, int a, int s, int t) {
  if (s == t) return eval_f(b, n, m, a, s, s);
  return eval_f(b, n, m, a, s, t) + eval_f(b, n, m, a, t, s);
}

CopyCount bipartite_threshold(const BoundParams& p, int m) {
  require(p.s >= 1 && p.t >= 1, "requires s >= 1 and t >= 1");
  require(p.r >= 1, "requires r >= 1");
  require(p.k >= 0, "requires k >= 0 (negative k is rejected)");
  require(p.b >= p.n, "requires b >= n");
  require(p.n >= 2 * p.k + 2 * p.r, "requires n >= 2k + 2r");
  const int h = m / 2;
  require(p.r <= h, "requires r <= h");
  return std::max(f_branch(p.b, p.n, m, p.r, p.s, p.t),
                  f_branch(p.b, p.n, m, h, p.s, p.t));
}

}  // namespace

CopyCount eval_f(int b, int n, int m, int a, int s, int t) {
  require(s >= 1 && t >= 1, "eval_f requires s >= 1 and t >= 1");
  require(n >= 1, "eval_f requires n >= 1");
  require(b >= n, "eval_f requires b >= n");
  require(0 <= a && a <= m && m <= n, "eval_f requires 0 <= a <= m <= n");
  CopyCount v = binomial(b, s) * binomial(m - a, t) + binomial(a, s) * binomial(n, t) -
                binomial(a, s) * binomial(m - a, t);
  if (v < 0) throw internal_error("eval_f produced a negative value");
  return v;
}

CopyCount eval_g(int n, int k, int a, int s, int t) {
  require(s >= 1 && t >= 1, "eval_g requires s >= 1 and t >= 1");
  require(n >= k, "eval_g requires n >= k");
  require(k >= 3, "eval_g requires k >= 3");
  require(a >= 1 && 2 * a < k, "eval_g requires k/2 > a >= 1");
  CopyCount total = 0;
  if (s == t) {
    for (int i = 1; i <= n - k + a; ++i)
      total += binomial(a, s) * binomial(n - s - i, s - 1);
    CopyCount clique = binomial(k - a, 2 * s) * binomial(2 * s, s);
    if (clique % 2 != 0) throw internal_error("odd clique term before exact halving");
    total += clique / 2;
  } else {
    for (int i = 1; i <= n - k + a; ++i)
      total += binomial(a, s) * binomial(n - s - i, t - 1) +
               binomial(a, t) * binomial(n - t - i, s - 1);
    total += binomial(k - a, s + t) * binomial(s + t, s);
  }
  return total;
}

CopyCount threshold_cycle_bipartite(const BoundParams& p) {
  return bipartite_threshold(p, p.n - p.k);
}

CopyCount threshold_path_bipartite(const BoundParams& p) {
  return bipartite_threshold(p, p.n - p.k - 1);
}

CopyCount threshold_matching_bipartite(const BoundParams& p) {
  return threshold_path_bipartite(p);
}

CopyCount threshold_cycle_general(const BoundParams& p) {
  require(p.s >= 1 && p.t >= 1, "requires s >= 1 and t >= 1");
  require(p.n >= p.k && p.k >= 5, "requires n >= k >= 5");
  const int h = (p.k - 1) / 2;
  require(p.r >= 2 && p.r <= h, "requires 2 <= r <= floor((k-1)/2)");
  return std::max(eval_g(p.n, p.k, p.r, p.s, p.t), eval_g(p.n, p.k, h, p.s, p.t));
}

CopyCount threshold_path_general(const BoundParams& p) {
  require(p.s >= 1 && p.t >= 1, "requires s >= 1 and t >= 1");
  require(p.n >= p.k && p.k >= 4, "requires n >= k >= 4");
  const int h = (p.k - 2) / 2;
  require(p.r >= 1 && p.r <= h, "requires 1 <= r <= floor((k-2)/2)");
  return std::max(eval_g(p.n, p.k - 1, p.r, p.s, p.t),
                  eval_g(p.n, p.k - 1, h, p.s, p.t));
}

bool check_discrete_convexity(const std::function<CopyCount(int)>& fn, int lo, int hi) {
  if (lo > hi) throw domain_error("check_discrete_convexity requires lo <= hi");
  for (int a = lo + 1; a < hi; ++a)
    if (fn(a - 1) + fn(a + 1) < 2 * fn(a)) return false;
  return true;
}

}  // namespace exturan
