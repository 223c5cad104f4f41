#include "domcyc/enumerate.hpp"

#include <omp.h>

#include <bit>
#include <stdexcept>
#include <vector>

namespace domcyc {

namespace {

constexpr int kEnumMax = 10;

// Is the column-order adjacency string of rows[0..n) minimal over all vertex
// permutations? Branch and bound over permutation prefixes: a branch survives
// only while its columns tie the original; a strictly smaller column anywhere
// proves non-minimality. placed_adj[w] accumulates w's adjacency to the placed
// vertices with bit p = position p, so column comparison is one XOR.
struct MinimalityCheck {
  const uint64_t* rows;
  int n;
  std::array<uint64_t, kMaxOrder> orig_col{};
  std::array<uint64_t, kMaxOrder> placed_adj{};
  uint64_t unused = 0;

  bool run() {
    for (int j = 0; j < n; ++j) orig_col[j] = rows[j] & ((uint64_t{1} << j) - 1);
    unused = VertexSet::range(n).bits();
    return descend(0);
  }

  bool descend(int j) {
    if (j == n) return true;  // full tie: an automorphism, not a smaller string
    for (int w : VertexSet(unused)) {
      uint64_t diff = placed_adj[w] ^ orig_col[j];
      if (diff != 0) {
        if ((orig_col[j] >> std::countr_zero(diff)) & 1) return false;  // smaller string found
        continue;                                                       // larger, dead branch
      }
      unused &= ~(uint64_t{1} << w);
      uint64_t touched = rows[w] & unused;
      for (int x : VertexSet(touched)) placed_adj[x] |= uint64_t{1} << j;
      bool ok = descend(j + 1);
      for (int x : VertexSet(touched)) placed_adj[x] &= ~(uint64_t{1} << j);
      unused |= uint64_t{1} << w;
      if (!ok) return false;
    }
    return true;
  }
};

bool passes(const Graph& g, EnumFilter filter) {
  switch (filter) {
    case EnumFilter::all:
      return true;
    case EnumFilter::connected:
      return is_connected(g);
    case EnumFilter::two_connected:
      return is_two_connected(g);
  }
  return false;
}

struct Generator {
  int n;
  EnumFilter filter;
  const std::function<bool(const Graph&)>& visit;
  std::array<uint64_t, kEnumMax> rows{};
  bool stopped = false;

  void extend(int k) {
    if (stopped) return;
    if (k == n) {
      Graph g = Graph::from_rows(n, rows.data());
      if (passes(g, filter) && !visit(g)) stopped = true;
      return;
    }
    for (uint64_t col = 0; col < (uint64_t{1} << k) && !stopped; ++col) {
      rows[k] = col;
      for (int i : VertexSet(col)) rows[i] |= uint64_t{1} << k;
      MinimalityCheck check{rows.data(), k + 1};
      if (check.run()) extend(k + 1);
      for (int i : VertexSet(col)) rows[i] &= ~(uint64_t{1} << k);
    }
    rows[k] = 0;
  }
};

}  // namespace

bool has_lexmin_adjacency_string(const Graph& g) {
  std::array<uint64_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).bits();
  MinimalityCheck check{rows.data(), g.order()};
  return check.run();
}

void enumerate_graphs(int n, EnumFilter filter, const std::function<bool(const Graph&)>& visit) {
  if (n < 3 || n > kEnumMax) throw std::invalid_argument("enumerator supports 3 <= n <= 10");
  Generator gen{n, filter, visit};
  gen.extend(1);
}

void enumerate_graphs_parallel(int n, EnumFilter filter, int jobs,
                               const std::function<bool(const Graph&)>& visit) {
  if (jobs <= 1 || n < 4) {
    enumerate_graphs(n, filter, visit);
    return;
  }
  if (n > kEnumMax) throw std::invalid_argument("enumerator supports 3 <= n <= 10");

  // order n-1 prefixes in DFS order; each packs into n-1 16-bit rows
  std::vector<std::array<uint16_t, kEnumMax>> roots;
  {
    Generator gen{n - 1, EnumFilter::all, [&](const Graph& g) {
                    std::array<uint16_t, kEnumMax> rows{};
                    for (int v = 0; v < n - 1; ++v)
                      rows[v] = static_cast<uint16_t>(g.neighbors(v).bits());
                    roots.push_back(rows);
                    return true;
                  }};
    gen.extend(1);
  }

  const size_t batch = 1024;
  bool stopped = false;
  for (size_t base = 0; base < roots.size() && !stopped; base += batch) {
    const long limit = static_cast<long>(std::min(batch, roots.size() - base));
    std::vector<std::vector<Graph>> results(limit);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long i = 0; i < limit; ++i) {
      std::array<uint64_t, kEnumMax> rows{};
      for (int v = 0; v < n - 1; ++v) rows[v] = roots[base + i][v];
      for (uint64_t col = 0; col < (uint64_t{1} << (n - 1)); ++col) {
        rows[n - 1] = col;
        for (int v : VertexSet(col)) rows[v] |= uint64_t{1} << (n - 1);
        MinimalityCheck check{rows.data(), n};
        if (check.run()) {
          Graph g = Graph::from_rows(n, rows.data());
          if (passes(g, filter)) results[i].push_back(g);
        }
        for (int v : VertexSet(col)) rows[v] &= ~(uint64_t{1} << (n - 1));
      }
    }
    for (long i = 0; i < limit && !stopped; ++i)
      for (const Graph& g : results[i])
        if (!visit(g)) {
          stopped = true;
          break;
        }
  }
}

}  // namespace domcyc
