#include "domcyc/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace domcyc {

OrientedCycle::OrientedCycle(const Graph& host, std::vector<int> seq) : seq_(std::move(seq)) {
  pos_.fill(-1);
  if (seq_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (size_t i = 0; i < seq_.size(); ++i) {
    int v = seq_[i];
    if (v < 0 || v >= host.order()) throw std::invalid_argument("cycle vertex out of range");
    if (pos_[v] >= 0) throw std::invalid_argument("repeated cycle vertex");
    pos_[v] = static_cast<int8_t>(i);
    mask_ |= uint64_t{1} << v;
  }
  for (size_t i = 0; i < seq_.size(); ++i)
    if (!host.adjacent(seq_[i], seq_[(i + 1) % seq_.size()]))
      throw std::invalid_argument("consecutive cycle vertices not adjacent in host");
}

int OrientedCycle::position_of(int v) const {
  if (!on_cycle(v)) throw std::invalid_argument("vertex not on cycle");
  return pos_[v];
}

int OrientedCycle::successor(int v, int h) const {
  int len = length();
  int p = position_of(v) + h % len + len;
  return seq_[p % len];
}

VertexSet OrientedCycle::shifted(VertexSet x, int h) const {
  VertexSet out;
  for (int v : x) out.add(successor(v, h));
  return out;
}

std::vector<int> OrientedCycle::arc(int u, int v) const {
  std::vector<int> out;
  int p = position_of(u), q = position_of(v), len = length();
  for (int i = p;; i = (i + 1) % len) {
    out.push_back(seq_[i]);
    if (i == q) break;
  }
  return out;
}

bool OrientedCycle::valid_in(const Graph& g) const {
  for (size_t i = 0; i < seq_.size(); ++i) {
    if (seq_[i] >= g.order()) return false;
    if (!g.adjacent(seq_[i], seq_[(i + 1) % seq_.size()])) return false;
  }
  return true;
}

namespace {

uint64_t reach_from(const Graph& g, int src, uint64_t avail) {
  uint64_t reach = uint64_t{1} << src;
  uint64_t frontier = reach;
  while (frontier) {
    uint64_t grown = reach;
    for (int v : VertexSet(frontier)) grown |= g.neighbors(v).bits() & avail;
    frontier = grown & ~reach;
    reach = grown;
  }
  return reach;
}

// Shared depth-first path extension. Cycles are rooted at their minimum
// vertex s; only vertices > s may appear later in the path, and a closing is
// reported once per rotation/reflection class via path[1] < path.back().
struct CycleSearch {
  const Graph& g;
  int n;
  std::array<int, kMaxOrder> path{};
  uint64_t used = 0;
  bool stopped = false;

  explicit CycleSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  // exact search for the maximum closable length
  int best = 0;
  void max_search(int s, int len) {
    if (stopped) return;
    int end = path[len - 1];
    if (len >= 3 && g.adjacent(end, s) && len > best) {
      best = len;
      if (best == n) {
        stopped = true;  // cannot beat a Hamilton cycle
        return;
      }
    }
    uint64_t above = VertexSet::range(n).bits() & ~((uint64_t{2} << s) - 1);
    uint64_t avail = above & ~used;
    uint64_t reach = reach_from(g, end, avail);
    if (len + std::popcount(reach & ~used) <= best) return;
    if ((reach & g.neighbors(s).bits()) == 0) return;
    for (int v : VertexSet(g.neighbors(end).bits() & avail)) {
      path[len] = v;
      used |= uint64_t{1} << v;
      max_search(s, len + 1);
      used &= ~(uint64_t{1} << v);
      if (stopped) return;
    }
  }

  // enumeration of cycles of one exact length
  int target = 0;
  const std::function<bool(const OrientedCycle&)>* visit = nullptr;
  void enum_search(int s, int len) {
    if (stopped) return;
    int end = path[len - 1];
    if (len == target) {
      if (g.adjacent(end, s) && path[1] < path[len - 1]) {
        std::vector<int> seq(path.begin(), path.begin() + len);
        if (!(*visit)(OrientedCycle(g, std::move(seq)))) stopped = true;
      }
      return;
    }
    uint64_t above = VertexSet::range(n).bits() & ~((uint64_t{2} << s) - 1);
    uint64_t avail = above & ~used;
    uint64_t reach = reach_from(g, end, avail);
    if (len + std::popcount(reach & ~used) < target) return;
    if ((reach & g.neighbors(s).bits()) == 0) return;
    for (int v : VertexSet(g.neighbors(end).bits() & avail)) {
      path[len] = v;
      used |= uint64_t{1} << v;
      enum_search(s, len + 1);
      used &= ~(uint64_t{1} << v);
      if (stopped) return;
    }
  }

  void run_starts(bool enumerating) {
    for (int s = 0; s < n && !stopped; ++s) {
      if (enumerating ? (n - s < target) : (n - s <= best)) break;
      path[0] = s;
      used = uint64_t{1} << s;
      if (enumerating)
        enum_search(s, 1);
      else
        max_search(s, 1);
    }
  }
};

}  // namespace

int circumference(const Graph& g) {
  if (g.order() < 3) return 0;
  CycleSearch search(g);
  search.run_starts(false);
  return search.best;
}

void for_each_cycle_of_length(const Graph& g, int length,
                              const std::function<bool(const OrientedCycle&)>& visit) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (length > g.order()) return;
  CycleSearch search(g);
  search.target = length;
  search.visit = &visit;
  search.run_starts(true);
}

void for_each_longest_cycle(const Graph& g, const std::function<bool(const OrientedCycle&)>& visit) {
  int c = circumference(g);
  if (c < 3) return;
  for_each_cycle_of_length(g, c, visit);
}

std::vector<OrientedCycle> all_longest_cycles(const Graph& g) {
  std::vector<OrientedCycle> out;
  for_each_longest_cycle(g, [&](const OrientedCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

void require_valid(const Graph& g, const OrientedCycle& c) {
  if (!c.valid_in(g)) throw std::invalid_argument("cycle not valid in this graph");
}

}  // namespace

bool is_dominating(const Graph& g, const OrientedCycle& c) {
  require_valid(g, c);
  return is_independent(g, g.vertices() - c.vertex_set());
}

bool has_dominating_longest_cycle(const Graph& g) {
  bool found = false;
  for_each_longest_cycle(g, [&](const OrientedCycle& c) {
    if (is_dominating(g, c)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool has_dominating_cycle(const Graph& g) {
  // dominating cycles tend to be long; search lengths downward
  for (int len = circumference(g); len >= 3; --len) {
    bool found = false;
    for_each_cycle_of_length(g, len, [&](const OrientedCycle& c) {
      if (is_dominating(g, c)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

CycleStats cycle_stats(const Graph& g, const OrientedCycle& c) {
  require_valid(g, c);
  CycleStats stats;
  for (const VertexSet& comp : components(g, c.vertex_set())) {
    int size = comp.count();
    if (size > stats.mu) {
      stats.mu = size;
      stats.omega = 1;
    } else if (size == stats.mu) {
      ++stats.omega;
    }
  }
  return stats;
}

std::pair<OrientedCycle, CycleStats> select_extremal_cycle(const Graph& g) {
  std::vector<OrientedCycle> chosen;
  CycleStats best{};
  for_each_longest_cycle(g, [&](const OrientedCycle& c) {
    CycleStats stats = cycle_stats(g, c);
    if (chosen.empty() || stats.mu < best.mu || (stats.mu == best.mu && stats.omega < best.omega)) {
      chosen.assign(1, c);
      best = stats;
      if (best.mu == 0) return false;  // Hamiltonian, cannot improve
    }
    return true;
  });
  if (chosen.empty()) throw std::invalid_argument("graph has no cycle");
  return {chosen.front(), best};
}

bool c_path_exists(const Graph& g, const OrientedCycle& c, int a, int b) {
  require_valid(g, c);
  if (a == b) throw std::invalid_argument("c_path endpoints must differ");
  if (!c.on_cycle(a) || !c.on_cycle(b)) throw std::invalid_argument("c_path endpoint not on cycle");
  if (g.adjacent(a, b)) return true;
  for (const VertexSet& comp : components(g, c.vertex_set()))
    if (comp.intersects(g.neighbors(a)) && comp.intersects(g.neighbors(b))) return true;
  return false;
}

}  // namespace domcyc
