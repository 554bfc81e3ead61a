#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exturan/errors.hpp"

namespace exturan {

// Undirected simple graph stored as per-vertex adjacency bitsets.
// Row v occupies words_per_row() consecutive 64-bit words starting at
// words()[v * words_per_row()]; orders up to 64 use a single word per row,
// larger orders fall back to multi-word rows transparently.
//
// The adjacency relation is kept symmetric and irreflexive by construction:
// add_edge/remove_edge touch both rows and reject self-loops. Analysis code
// takes graphs by const reference; mutation is a construction-time affair.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) { reset(order); }

  void reset(int order) {
    if (order < 0) throw domain_error("graph order must be >= 0");
    order_ = order;
    wpr_ = order <= 64 ? 1 : (order + 63) / 64;
    rows_.assign(static_cast<std::size_t>(order) * wpr_, 0);
  }

  void clear_edges() { rows_.assign(rows_.size(), 0); }

  int order() const { return order_; }
  int words_per_row() const { return wpr_; }
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * wpr_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(v)[u >> 6] >> (u & 63)) & 1;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw domain_error("self-loops are not allowed");
    mut_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    mut_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    mut_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    mut_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }

  int degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < order_; ++v) total += degree(v);
    return total / 2;
  }

  bool operator==(const Graph& o) const { return order_ == o.order_ && rows_ == o.rows_; }

  // Fast single-word row access; valid only when order() <= 64.
  std::uint64_t row64(int v) const { return rows_[static_cast<std::size_t>(v) * wpr_]; }

  template <class F>
  void for_neighbors(int v, F f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < wpr_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int u = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        f(u);
      }
    }
  }

 private:
  std::uint64_t* mut_row(int v) { return rows_.data() + static_cast<std::size_t>(v) * wpr_; }
  void check_vertex(int v) const {
    if (v < 0 || v >= order_) throw domain_error("vertex index out of range");
  }

  int order_ = 0;
  int wpr_ = 1;
  std::vector<std::uint64_t> rows_;
};

// A graph together with a two-part vertex assignment. Every edge must join
// an X-vertex to a Y-vertex; n = |X|, b = |Y|. Constructions and sweeps use
// the contiguous convention X = 0..n-1, Y = n..n+b-1, but arbitrary part
// assignments are accepted.
struct BipartiteGraph {
  Graph graph;
  std::vector<std::uint64_t> x_mask;  // bit v set iff v is in X
  int n = 0;
  int b = 0;

  bool in_x(int v) const { return (x_mask[v >> 6] >> (v & 63)) & 1; }
};

// Validates that part_of (0 = X, 1 = Y) is a proper bipartition of g.
// Throws domain_error naming the first intra-part edge otherwise.
BipartiteGraph bipartition_check(const Graph& g, const std::vector<int>& part_of);

// Contiguous-convention wrapper: X = 0..n-1, Y = n..n+b-1.
BipartiteGraph make_bipartite(const Graph& g, int n, int b);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);
int min_degree(const Graph& g);  // throws domain_error on the empty graph

// graph6 codec, bit-exact per the standard byte layout: size field, then the
// upper-triangular adjacency matrix in column order packed into 6-bit groups
// offset by 63. decode rejects bad lengths, out-of-range bytes, and nonzero
// padding bits, reporting the byte offset.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view bytes);

// An ordered sequence of distinct vertices of a host graph in which every
// consecutive pair is an edge.
struct PathView {
  std::vector<int> vertices;
};

bool is_valid_path(const Graph& g, const PathView& p);

}  // namespace exturan
