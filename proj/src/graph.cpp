#include "domcyc/graph.hpp"

namespace domcyc {

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("subset exceeds graph vertices");
  int k = s.count();
  // order-preserving relabeling: i-th smallest member of s becomes vertex i
  std::array<int, kMaxOrder> label{};
  int next = 0;
  for (int v : s) label[v] = next++;
  std::array<uint64_t, kMaxOrder> rows{};
  for (int v : s) {
    uint64_t row = 0;
    for (int u : g.neighbors(v) & s) row |= uint64_t{1} << label[u];
    rows[label[v]] = row;
  }
  return Graph::from_rows(k, rows.data());
}

VertexSet neighborhood(const Graph& g, int v, VertexSet x) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  return g.neighbors(v) & x;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet todo = g.vertices() - removed;
  while (!todo.empty()) {
    int start = todo.min_vertex();
    uint64_t comp = uint64_t{1} << start;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t grown = comp;
      for (int v : VertexSet(frontier)) grown |= (g.neighbors(v) & (VertexSet(todo.bits()))).bits();
      frontier = grown & ~comp;
      comp = grown;
    }
    out.push_back(VertexSet(comp));
    todo = todo - VertexSet(comp);
  }
  return out;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s)
    if ((g.neighbors(v) & s).bits()) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return components(g, VertexSet()).size() == 1;
}

namespace {

// Iterative lowpoint DFS; returns true iff some vertex of the (connected) graph
// is an articulation vertex.
bool has_articulation(const Graph& g) {
  int n = g.order();
  std::array<int, kMaxOrder> disc{}, low{}, parent{}, it{};
  disc.fill(-1);
  parent.fill(-1);
  int timer = 0;
  int stack[kMaxOrder];
  int top = 0;
  stack[top++] = 0;
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (top > 0) {
    int v = stack[top - 1];
    if (it[v] < n) {
      int u = it[v]++;
      if (!g.adjacent(v, u)) continue;
      if (disc[u] == -1) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        if (v == 0) ++root_children;
        stack[top++] = u;
      } else if (u != parent[v]) {
        if (disc[u] < low[v]) low[v] = disc[u];
      }
    } else {
      --top;
      int p = parent[v];
      if (p != -1) {
        if (low[v] < low[p]) low[p] = low[v];
        if (p != 0 && low[v] >= disc[p]) return true;
      }
    }
  }
  return root_children > 1;
}

}  // namespace

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return !has_articulation(g);
}

bool is_complete_multipartite(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    VertexSet strangers = (g.vertices() - g.neighbors(v)).without(v);
    if (!is_independent(g, strangers)) return false;
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if ((g.neighbors(u) & g.neighbors(v)).bits()) return true;
    }
  return false;
}

}  // namespace domcyc
