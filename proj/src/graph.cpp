#include "exturan/graph.hpp"

#include <algorithm>

namespace exturan {

namespace {

// Word-parallel BFS over the whole vertex set, skipping `skip` (pass -1 to
// keep everything). Returns the number of vertices reached from `start`.
// Buffers live on the stack for typical row widths; sweeps call this once
// per enumerated graph.
int bfs_reach_count(const Graph& g, int start, int skip) {
  const int wpr = g.words_per_row();
  constexpr int kStackWords = 8;
  std::uint64_t stack_buf[3 * kStackWords] = {};
  std::vector<std::uint64_t> heap_buf;
  std::uint64_t* visited;
  if (wpr <= kStackWords) {
    visited = stack_buf;
  } else {
    heap_buf.assign(3 * static_cast<std::size_t>(wpr), 0);
    visited = heap_buf.data();
  }
  std::uint64_t* frontier = visited + wpr;
  std::uint64_t* next = frontier + wpr;

  visited[start >> 6] |= std::uint64_t{1} << (start & 63);
  frontier[start >> 6] |= std::uint64_t{1} << (start & 63);
  std::uint64_t skip_word = 0;
  if (skip >= 0) skip_word = std::uint64_t{1} << (skip & 63);

  bool more = true;
  while (more) {
    for (int w = 0; w < wpr; ++w) next[w] = 0;
    for (int w = 0; w < wpr; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* r = g.row(v);
        for (int x = 0; x < wpr; ++x) next[x] |= r[x];
      }
    }
    if (skip >= 0) next[skip >> 6] &= ~skip_word;
    more = false;
    for (int w = 0; w < wpr; ++w) {
      frontier[w] = next[w] & ~visited[w];
      visited[w] |= frontier[w];
      if (frontier[w]) more = true;
    }
  }
  int count = 0;
  for (int w = 0; w < wpr; ++w) count += std::popcount(visited[w]);
  return count;
}

}  // namespace

BipartiteGraph bipartition_check(const Graph& g, const std::vector<int>& part_of) {
  const int n = g.order();
  if (static_cast<int>(part_of.size()) != n)
    throw domain_error("part assignment must cover every vertex");
  BipartiteGraph bg;
  bg.graph = g;
  bg.x_mask.assign(std::max(1, (n + 63) / 64), 0);
  for (int v = 0; v < n; ++v) {
    if (part_of[v] != 0 && part_of[v] != 1)
      throw domain_error("part labels must be 0 (X) or 1 (Y)");
    if (part_of[v] == 0) {
      bg.x_mask[v >> 6] |= std::uint64_t{1} << (v & 63);
      ++bg.n;
    } else {
      ++bg.b;
    }
  }
  for (int u = 0; u < n; ++u) {
    bool fail = false;
    int bad = -1;
    g.for_neighbors(u, [&](int v) {
      if (v > u && part_of[u] == part_of[v] && !fail) {
        fail = true;
        bad = v;
      }
    });
    if (fail)
      throw domain_error("invalid bipartition: edge " + std::to_string(u) + "-" +
                         std::to_string(bad) + " lies inside part " +
                         (part_of[u] == 0 ? "X" : "Y"));
  }
  return bg;
}

BipartiteGraph make_bipartite(const Graph& g, int n, int b) {
  if (n < 0 || b < 0 || n + b != g.order())
    throw domain_error("part sizes must sum to the graph order");
  std::vector<int> part_of(g.order(), 1);
  for (int v = 0; v < n; ++v) part_of[v] = 0;
  return bipartition_check(g, part_of);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return bfs_reach_count(g, 0, -1) == g.order();
}

bool is_biconnected(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    int start = v == 0 ? 1 : 0;
    if (bfs_reach_count(g, start, v) != n - 1) return false;
  }
  return true;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw domain_error("min_degree of the empty graph is undefined");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    acc <<= 6 - nbits;
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

Graph decode_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (bytes.size() < pos + k) throw parse_error("truncated graph6 record", bytes.size());
  };
  auto sixbits = [&]() -> long long {
    need(1);
    unsigned char c = static_cast<unsigned char>(bytes[pos]);
    if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", pos);
    ++pos;
    return c - 63;
  };

  need(1);
  long long n;
  if (static_cast<unsigned char>(bytes[0]) != 126) {
    n = sixbits();
  } else {
    ++pos;
    need(1);
    if (static_cast<unsigned char>(bytes[1]) == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | sixbits();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | sixbits();
    }
  }
  if (n > 1'000'000) throw parse_error("graph6 order implausibly large", 0);

  Graph g(static_cast<int>(n));
  const long long nbits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
  if (bytes.size() != pos + body)
    throw parse_error("graph6 record has wrong length", bytes.size() > pos + body ? pos + body : bytes.size());

  int acc = 0, have = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (have == 0) {
        acc = static_cast<int>(sixbits());
        have = 6;
      }
      if ((acc >> (have - 1)) & 1) g.add_edge(u, v);
      --have;
    }
  }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0)
    throw parse_error("nonzero padding bits in graph6 record", pos - 1);
  return g;
}

bool is_valid_path(const Graph& g, const PathView& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int v = vs[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(vs[i - 1], v)) return false;
  }
  return true;
}

}  // namespace exturan
