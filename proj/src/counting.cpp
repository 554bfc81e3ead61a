#include "exturan/counting.hpp"

#include <array>
#include <functional>
#include <limits>

namespace exturan {

CopyCount binomial(long long n, long long k) {
  if (n < 0) throw domain_error("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  CopyCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

namespace detail {

// C(n, k) for n <= 64, k <= 8; largest entry C(64, 8) fits comfortably.
struct BinomTable {
  std::array<std::array<std::uint64_t, 9>, 65> c{};
  BinomTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= 8; ++k)
        c[n][k] = k > n ? 0 : (n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k]);
    }
  }
};
const BinomTable kBinom;

bool u64_kernel_fits(int order, int s, int t) {
  if (order > 64 || s > 8 || t > 8) return false;
  CopyCount bound = binomial(order, s) * binomial(order, t);
  return bound <= CopyCount(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t count_kst_u64(const Graph& g, int s, int t) {
  const int n = g.order();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Degree prune: every vertex of S needs >= t common-neighborhood candidates.
  int cand[64];
  int nc = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= t) cand[nc++] = v;

  std::uint64_t total = 0;
  // Iterative lexicographic enumeration of s-subsets of cand with running
  // neighborhood intersections per level.
  std::array<int, 9> idx{};
  std::array<std::uint64_t, 9> inter{};
  inter[0] = full;
  int depth = 0;
  idx[0] = 0;
  while (depth >= 0) {
    if (idx[depth] > nc - (s - depth)) {  // not enough vertices left
      --depth;
      if (depth >= 0) ++idx[depth];
      continue;
    }
    std::uint64_t w = inter[depth] & g.row64(cand[idx[depth]]);
    if (std::popcount(w) < t) {  // intersections only shrink; dead branch
      ++idx[depth];
      continue;
    }
    if (depth + 1 == s) {
      total += kBinom.c[std::popcount(w)][t];
      ++idx[depth];
    } else {
      inter[depth + 1] = w;
      idx[depth + 1] = idx[depth] + 1;
      ++depth;
    }
  }
  if (s == t) {
    if (total & 1) throw internal_error("ordered K_{s,s} total must be even");
    total >>= 1;
  }
  return total;
}

}  // namespace detail

namespace {

// Arbitrary-order recursion with multi-word intersections; exact everywhere.
void count_rec(const Graph& g, int s, int t, int start, int depth,
               std::vector<std::uint64_t>& inter, const std::vector<int>& cand,
               CopyCount& total) {
  const int wpr = g.words_per_row();
  const std::uint64_t* cur = inter.data() + static_cast<std::size_t>(depth) * wpr;
  for (std::size_t i = start; i + (s - depth) <= cand.size(); ++i) {
    std::uint64_t* next = inter.data() + static_cast<std::size_t>(depth + 1) * wpr;
    const std::uint64_t* r = g.row(cand[i]);
    int pc = 0;
    for (int w = 0; w < wpr; ++w) {
      next[w] = cur[w] & r[w];
      pc += std::popcount(next[w]);
    }
    if (pc < t) continue;
    if (depth + 1 == s) {
      total += binomial(pc, t);
    } else {
      count_rec(g, s, t, static_cast<int>(i) + 1, depth + 1, inter, cand, total);
    }
  }
}

}  // namespace

CopyCount count_kst(const Graph& g, int s, int t) {
  if (s < 1 || t < 1) throw domain_error("count_kst requires s >= 1 and t >= 1");
  if (detail::u64_kernel_fits(g.order(), s, t))
    return CopyCount(detail::count_kst_u64(g, s, t));

  const int wpr = g.words_per_row();
  std::vector<int> cand;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= t) cand.push_back(v);
  std::vector<std::uint64_t> inter(static_cast<std::size_t>(s + 1) * wpr, 0);
  for (int w = 0; w < wpr; ++w) inter[w] = ~std::uint64_t{0};
  // Mask off bits beyond the vertex range in the top word.
  if (g.order() % 64 != 0)
    inter[wpr - 1] = (std::uint64_t{1} << (g.order() % 64)) - 1;
  CopyCount total = 0;
  count_rec(g, s, t, 0, 0, inter, cand, total);
  if (s == t) {
    if (total % 2 != 0) throw internal_error("ordered K_{s,s} total must be even");
    total /= 2;
  }
  return total;
}

CopyCount count_kst_oracle(const Graph& g, int s, int t) {
  if (s < 1 || t < 1) throw domain_error("count_kst_oracle requires s >= 1 and t >= 1");
  const int n = g.order();
  if (n > 12) throw scale_error("count_kst_oracle is limited to order <= 12");

  std::vector<int> svtx(s), tvtx(t);
  CopyCount total = 0;

  // All s-subsets S and t-subsets T of V \ S, adjacency checked pairwise.
  // For s = t, copies are deduplicated by requiring min(S) < min(T).
  auto complete_between = [&]() {
    for (int a : svtx)
      for (int b : tvtx)
        if (!g.has_edge(a, b)) return false;
    return true;
  };

  std::function<void(int, int)> pick_t = [&](int start, int d) {
    if (d == t) {
      if (complete_between()) ++total;
      return;
    }
    for (int v = start; v < n; ++v) {
      bool used = false;
      for (int a : svtx)
        if (a == v) used = true;
      if (used) continue;
      tvtx[d] = v;
      pick_t(v + 1, d + 1);
    }
  };
  std::function<void(int, int)> pick_s = [&](int start, int d) {
    if (d == s) {
      pick_t(s == t ? svtx[0] + 1 : 0, 0);
      return;
    }
    for (int v = start; v < n; ++v) {
      svtx[d] = v;
      pick_s(v + 1, d + 1);
    }
  };
  pick_s(0, 0);
  return total;
}

}  // namespace exturan
