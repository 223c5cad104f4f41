#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace domcyc {

// One adjacency row per machine word: everything here assumes order <= 64.
inline constexpr int kMaxOrder = 64;

/// Subset of vertices 0..63 stored as a single bit row.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr int min_vertex() const { return std::countr_zero(bits_); }

  void add(int v) { bits_ |= uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(uint64_t{1} << v); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(uint64_t{1} << v)); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  // Iterates set members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend bool operator!=(iterator a, iterator b) { return a.rest_ != b.rest_; }

   private:
    uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1, adjacency as bit rows.
class Graph {
 public:
  Graph() : n_(0), adj_{} {}

  explicit Graph(int n) : n_(check_order(n)), adj_{} {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(check_order(n)), adj_{} {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : n_(check_order(n)), adj_{} {
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  /// Builds from raw adjacency rows; rows must be symmetric and irreflexive.
  static Graph from_rows(int n, const uint64_t* rows) {
    Graph g(n);
    uint64_t all = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~all) throw std::invalid_argument("adjacency row exceeds order");
      if ((rows[v] >> v) & 1) throw std::invalid_argument("self-loop in adjacency row");
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      for (int u : VertexSet(rows[v]))
        if (!((rows[u] >> v) & 1)) throw std::invalid_argument("asymmetric adjacency rows");
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph order out of range 0..64");
    return n;
  }
  void add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
  }

  int n_;
  std::array<uint64_t, kMaxOrder> adj_;
};

/// G[s], relabeled order-preservingly onto 0..|s|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// N_G(v) restricted to x.
VertexSet neighborhood(const Graph& g, int v, VertexSet x);

/// Connected components of G - removed, ordered by smallest vertex index.
std::vector<VertexSet> components(const Graph& g, VertexSet removed);

bool is_independent(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

/// n >= 3, connected, and no articulation vertex (lowpoint DFS).
bool is_two_connected(const Graph& g);

/// Edges exactly between classes of some vertex partition, i.e. non-adjacency
/// is an equivalence relation: the non-neighbors of every vertex form an
/// independent set.
bool is_complete_multipartite(const Graph& g);

/// Some edge uv with a common neighbor.
bool has_triangle(const Graph& g);

}  // namespace domcyc
