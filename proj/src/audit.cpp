#include "domcyc/audit.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "domcyc/catalog.hpp"
#include "domcyc/cycles.hpp"

namespace domcyc {

namespace {

std::string vlist(const std::vector<int>& vs) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << ']';
  return out.str();
}

std::string vset(VertexSet s) {
  std::vector<int> vs;
  for (int v : s) vs.push_back(v);
  return vlist(vs);
}

bool p5_free(const Graph& g) { return !contains_induced(g, path_graph(5)); }

VertexSet attachments(const Graph& g, VertexSet cyc, VertexSet comp) {
  VertexSet out;
  for (int h : comp) out = out | (g.neighbors(h) & cyc);
  return out;
}

// ---------------------------------------------------------------- consecutive

struct InducedPath {
  std::vector<int> verts;  // verts[0] is the shared end a
  uint64_t others = 0;     // V(Q1) minus a
};

std::vector<InducedPath> all_induced_paths(const Graph& g) {
  std::vector<InducedPath> out;
  int n = g.order();
  std::vector<int> path;
  uint64_t pathset = 0;
  auto dfs = [&](auto&& self, int last) -> void {
    if (path.size() >= 3)
      out.push_back({path, pathset & ~(uint64_t{1} << path[0])});
    for (int w : g.neighbors(last)) {
      if ((pathset >> w) & 1) continue;
      if (g.neighbors(w).bits() & (pathset & ~(uint64_t{1} << last))) continue;  // chord
      path.push_back(w);
      pathset |= uint64_t{1} << w;
      self(self, w);
      path.pop_back();
      pathset &= ~(uint64_t{1} << w);
    }
  };
  for (int a = 0; a < n; ++a) {
    path.assign(1, a);
    pathset = uint64_t{1} << a;
    dfs(dfs, a);
  }
  return out;
}

// violation iff no Q1-a/Q2-a edge and some Q2 vertex misses N(a)
void check_pair(const Graph& g, const InducedPath& q1, const std::vector<int>& q2,
                LemmaReport* report) {
  int a = q1.verts[0];
  bool cross = false, allneigh = true;
  for (size_t i = 1; i < q2.size(); ++i) {
    if (g.neighbors(q2[i]).bits() & q1.others) cross = true;
    if (!g.adjacent(a, q2[i])) allneigh = false;
  }
  ++report->instances;
  if (!cross && !allneigh)
    report->flag("a=" + std::to_string(a) + " Q1=" + vlist(q1.verts) + " Q2=" + vlist(q2));
}

// Exhaustive scan of Q2 paths from a. Branches where an edge into Q1-a has
// already appeared are pruned: every extension keeps the predicate true.
void q2_scan_full(const Graph& g, const InducedPath& q1, LemmaReport* report) {
  int a = q1.verts[0];
  std::vector<int> q2 = {a};
  uint64_t q2set = uint64_t{1} << a;
  auto dfs = [&](auto&& self, int last, bool allneigh) -> void {
    for (int w : g.neighbors(last)) {
      if (((q2set | q1.others) >> w) & 1) continue;
      if (g.neighbors(w).bits() & q1.others) continue;  // predicate holds from here on
      bool alln = allneigh && g.adjacent(a, w);
      q2.push_back(w);
      q2set |= uint64_t{1} << w;
      if (q2.size() >= 3) {
        ++report->instances;
        if (!alln)
          report->flag("a=" + std::to_string(a) + " Q1=" + vlist(q1.verts) + " Q2=" + vlist(q2));
      }
      self(self, w, alln);
      q2.pop_back();
      q2set &= ~(uint64_t{1} << w);
    }
  };
  dfs(dfs, a, true);
}

// Uniform sampling of simple paths from `a` avoiding `forbidden`, order >= 3,
// by subset dynamic programming (feasible to n <= 16).
struct PathSampler {
  const Graph& g;
  int n, a;
  uint64_t forbidden;
  std::vector<uint64_t> count;  // count[mask * n + end]
  uint64_t total = 0;

  PathSampler(const Graph& graph, int start, uint64_t avoid)
      : g(graph), n(graph.order()), a(start), forbidden(avoid), count((size_t(1) << n) * n, 0) {
    count[(size_t(uint64_t{1} << a)) * n + a] = 1;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
      if (!((mask >> a) & 1) || (mask & forbidden)) continue;
      for (int end : VertexSet(mask)) {
        uint64_t c = count[size_t(mask) * n + end];
        if (!c) continue;
        if (std::popcount(mask) >= 3) total += c;
        for (int w : VertexSet(g.neighbors(end).bits() & ~mask & ~forbidden))
          count[size_t(mask | (uint64_t{1} << w)) * n + w] += c;
      }
    }
  }

  std::vector<int> draw(std::mt19937_64& rng) const {
    uint64_t r = std::uniform_int_distribution<uint64_t>(0, total - 1)(rng);
    uint64_t mask = 0;
    int end = -1;
    for (uint64_t m = 1; m < (uint64_t{1} << n) && end < 0; ++m) {
      if (!((m >> a) & 1) || (m & forbidden) || std::popcount(m) < 3) continue;
      for (int e : VertexSet(m)) {
        uint64_t c = count[size_t(m) * n + e];
        if (r < c) {
          mask = m;
          end = e;
          break;
        }
        r -= c;
      }
    }
    std::vector<int> rev = {end};
    uint64_t m = mask;
    int cur = end;
    while (cur != a || std::popcount(m) > 1) {
      uint64_t rest = m & ~(uint64_t{1} << cur);
      uint64_t sum = 0;
      for (int p : VertexSet(g.neighbors(cur).bits() & rest)) sum += count[size_t(rest) * n + p];
      uint64_t r2 = std::uniform_int_distribution<uint64_t>(0, sum - 1)(rng);
      for (int p : VertexSet(g.neighbors(cur).bits() & rest)) {
        uint64_t c = count[size_t(rest) * n + p];
        if (r2 < c) {
          rev.push_back(p);
          m = rest;
          cur = p;
          break;
        }
        r2 -= c;
      }
    }
    return {rev.rbegin(), rev.rend()};
  }
};

// Budgeted random-walk fallback once the subset DP no longer fits.
std::vector<int> walk_path(const Graph& g, int a, uint64_t forbidden, std::mt19937_64& rng) {
  std::vector<int> path = {a};
  uint64_t used = (uint64_t{1} << a) | forbidden;
  int cur = a;
  while (true) {
    VertexSet options(g.neighbors(cur).bits() & ~used);
    if (options.empty()) break;
    int pick = std::uniform_int_distribution<int>(0, options.count() - 1)(rng);
    int w = 0;
    for (int v : options)
      if (pick-- == 0) w = v;
    path.push_back(w);
    used |= uint64_t{1} << w;
    cur = w;
    if (path.size() >= 3 && (rng() & 1)) break;
  }
  return path;
}

}  // namespace

LemmaReport audit_consecutive(const Graph& g, const AuditCaps& caps) {
  LemmaReport report;
  report.lemma = "consecutive";
  if (!p5_free(g)) return report;
  report.hypothesis_met = true;

  std::vector<InducedPath> q1s = all_induced_paths(g);
  if (g.order() <= caps.full_enum_max_order) {
    for (const InducedPath& q1 : q1s) q2_scan_full(g, q1, &report);
    return report;
  }

  report.sampled = true;
  std::mt19937_64 rng(caps.seed ^ 0x51a3u);
  std::vector<InducedPath> picked;
  std::sample(q1s.begin(), q1s.end(), std::back_inserter(picked),
              static_cast<size_t>(caps.q1_samples), rng);
  for (const InducedPath& q1 : picked) {
    int a = q1.verts[0];
    if (g.order() <= 16) {
      PathSampler sampler(g, a, q1.others);
      if (sampler.total == 0) continue;
      for (int i = 0; i < caps.q2_samples; ++i) check_pair(g, q1, sampler.draw(rng), &report);
    } else {
      for (int i = 0; i < caps.q2_samples; ++i) {
        std::vector<int> q2 = walk_path(g, a, q1.others, rng);
        if (q2.size() >= 3) check_pair(g, q1, q2, &report);
      }
    }
  }
  return report;
}

LemmaReport audit_extension(const Graph& g, const AuditCaps&) {
  LemmaReport report;
  report.lemma = "extension";
  int n = g.order();
  int circ = circumference(g);
  if (circ < 3 || circ == n || !p5_free(g)) return report;
  report.hypothesis_met = true;

  for_each_longest_cycle(g, [&](const OrientedCycle& c) {
    VertexSet cyc = c.vertex_set();
    for (const VertexSet& comp : components(g, cyc)) {
      VertexSet attach = attachments(g, cyc, comp);
      for (int v : attach) {
        if ((comp - g.neighbors(v)).empty()) continue;  // V(H) inside N(v): vacuous
        for (int dir : {+1, -1}) {
          int first = c.successor(v, dir);
          if (attach.contains(first)) continue;
          bool inside = g.adjacent(v, first);  // cycle edge, always true
          std::vector<int> arc = {first};
          for (int t = c.successor(first, dir); t != v; t = c.successor(t, dir)) {
            if (attach.contains(t)) break;  // arcs from here on carry an H attachment
            arc.push_back(t);
            inside = inside && g.adjacent(v, t);
            ++report.instances;
            if (!inside) {
              report.flag("v=" + std::to_string(v) + " dir=" + (dir > 0 ? "+" : "-") +
                          " arc=" + vlist(arc) + " H=" + vset(comp) + " C=" + vlist(c.seq()));
              break;
            }
          }
        }
      }
    }
    return true;
  });
  return report;
}

LemmaReport audit_maximality(const Graph& g) {
  LemmaReport report;
  report.lemma = "maximality";
  int n = g.order();
  int circ = circumference(g);
  if (circ < 3 || circ == n) return report;
  report.hypothesis_met = true;

  for_each_longest_cycle(g, [&](const OrientedCycle& c) {
    VertexSet cyc = c.vertex_set();
    std::string ctag = " C=" + vlist(c.seq());
    for (const VertexSet& comp : components(g, cyc)) {
      // neighborhood-shift exclusions for x, y in H
      for (int x : comp) {
        VertexSet nx = g.neighbors(x) & cyc;
        for (int y : comp) {
          VertexSet ny = g.neighbors(y) & cyc;
          ++report.instances;
          if (nx.intersects(c.shifted(ny, -1)))
            report.flag("(1) x=" + std::to_string(x) + " y=" + std::to_string(y) + ctag);
          if (x != y) {
            ++report.instances;
            if (nx.intersects(c.shifted(ny, -2)))
              report.flag("(1)' x=" + std::to_string(x) + " y=" + std::to_string(y) + ctag);
          }
        }
      }
      // attachment-pair exclusions
      VertexSet attach = attachments(g, cyc, comp);
      for (int v1 : attach) {
        for (int v2 : attach) {
          if (v1 == v2) continue;
          std::string tag = " v1=" + std::to_string(v1) + " v2=" + std::to_string(v2) + ctag;
          bool strong = ((g.neighbors(v1) | g.neighbors(v2)) & comp).count() >= 2;
          int v1m = c.predecessor(v1), v2m = c.predecessor(v2);
          int v1p = c.successor(v1), v2p = c.successor(v2);
          ++report.instances;
          if (c_path_exists(g, c, v1m, v2m)) report.flag("(2)(i) cpath(v1-,v2-)" + tag);
          ++report.instances;
          if (c_path_exists(g, c, v1p, v2p)) report.flag("(2)(i) cpath(v1+,v2+)" + tag);
          if (strong) {
            int v2mm = c.predecessor(v2, 2), v2pp = c.successor(v2, 2);
            if (v1m != v2mm) {
              ++report.instances;
              if (c_path_exists(g, c, v1m, v2mm)) report.flag("(2)(i)' cpath(v1-,v2-2)" + tag);
            }
            if (v1p != v2pp) {
              ++report.instances;
              if (c_path_exists(g, c, v1p, v2pp)) report.flag("(2)(i)' cpath(v1+,v2+2)" + tag);
            }
          }
          if (g.adjacent(v1, v2m)) {
            ++report.instances;
            if (g.adjacent(v1m, v1p)) report.flag("(2)(ii) v1-v1+" + tag);
            if (strong) {
              ++report.instances;
              if (g.adjacent(v1m, c.successor(v1, 2))) report.flag("(2)(ii)' v1-v1+2" + tag);
              ++report.instances;
              if (g.adjacent(c.predecessor(v1, 2), v1p)) report.flag("(2)(ii)' v1-2v1+" + tag);
            }
          }
          for (int w = v1;; w = c.successor(w)) {
            if (g.adjacent(v1m, w)) {
              ++report.instances;
              if (g.adjacent(v2p, c.successor(w)))
                report.flag("(2)(iii) w=" + std::to_string(w) + " fwd" + tag);
            }
            if (w == v2m) break;
          }
          for (int w = v1;; w = c.predecessor(w)) {
            if (g.adjacent(v1p, w)) {
              ++report.instances;
              if (g.adjacent(v2m, c.predecessor(w)))
                report.flag("(2)(iii) w=" + std::to_string(w) + " bwd" + tag);
            }
            if (w == v2p) break;
          }
        }
      }
    }
    return true;
  });
  return report;
}

namespace {

// Independent subsets of `eligible` in ascending-vertex order; returns false
// once more than `budget` subsets exist.
bool enumerate_independent_subsets(const Graph& g, VertexSet eligible, uint64_t budget,
                                   const std::function<void(VertexSet)>& fn) {
  uint64_t seen = 0;
  auto rec = [&](auto&& self, uint64_t chosen, uint64_t cands) -> bool {
    if (++seen > budget) return false;
    fn(VertexSet(chosen));
    for (int v : VertexSet(cands)) {
      uint64_t rest = cands & ~((uint64_t{2} << v) - 1) & ~g.neighbors(v).bits();
      if (!self(self, chosen | (uint64_t{1} << v), rest)) return false;
    }
    return true;
  };
  return rec(rec, 0, eligible.bits());
}

}  // namespace

LemmaReport audit_nondominating(const Graph& g, const AuditCaps& caps) {
  LemmaReport report;
  report.lemma = "nondominating";
  if (circumference(g) < 3) return report;
  if (has_dominating_longest_cycle(g)) return report;
  report.hypothesis_met = true;

  auto [c, stats] = select_extremal_cycle(g);
  VertexSet cyc = c.vertex_set();
  std::vector<VertexSet> maxcomps;
  for (const VertexSet& comp : components(g, cyc))
    if (comp.count() == stats.mu) maxcomps.push_back(comp);

  std::vector<uint64_t> longest;
  for_each_longest_cycle(g, [&](const OrientedCycle& d) {
    longest.push_back(d.vertex_set().bits());
    return true;
  });

  // (a) independent sets on C with no neighbor off C cannot be traded for H
  VertexSet offc = g.vertices() - cyc;
  VertexSet eligible;
  for (int v : cyc)
    if ((g.neighbors(v) & offc).empty()) eligible.add(v);

  auto check_s = [&](VertexSet s) {
    uint64_t need = (cyc - s).bits();
    for (const VertexSet& comp : maxcomps) {
      ++report.instances;
      for (uint64_t d : longest) {
        if ((need & ~d) == 0 && (d & comp.bits())) {
          report.flag("(a) S=" + vset(s) + " D=" + vset(VertexSet(d)) + " H=" + vset(comp) +
                      " C=" + vlist(c.seq()));
          break;
        }
      }
    }
  };
  if (!enumerate_independent_subsets(g, eligible, caps.s_budget, check_s)) {
    report.sampled = true;
    std::mt19937_64 rng(caps.seed ^ 0x5e75u);
    for (uint64_t i = 0; i < caps.s_budget; ++i) {
      VertexSet s(rng() & eligible.bits());
      if (is_independent(g, s)) check_s(s);
    }
  }

  if (!p5_free(g)) return report;  // (b) and (c) assume P5-free

  for (const VertexSet& comp : maxcomps) {
    VertexSet attach = attachments(g, cyc, comp);
    std::string htag = " H=" + vset(comp) + " C=" + vlist(c.seq());
    ++report.instances;
    if (attach.intersects(c.shifted(attach, -2))) report.flag("(b) N(H;C) meets N(H;C)-2" + htag);
    for (int v1 : attach) {
      for (int v2 : attach) {
        if (v1 == v2) continue;
        if (((g.neighbors(v1) | g.neighbors(v2)) & comp).count() < 2) continue;
        std::string tag = " v1=" + std::to_string(v1) + " v2=" + std::to_string(v2) + htag;
        ++report.instances;
        if (g.adjacent(c.predecessor(v1, 2), c.predecessor(v2, 2)))
          report.flag("(c)(i) v1-2v2-2" + tag);
        if (!(comp - g.neighbors(v1)).empty() && g.adjacent(v1, c.predecessor(v2))) {
          ++report.instances;
          if (g.adjacent(c.predecessor(v1, 2), c.successor(v1, 2)))
            report.flag("(c)(ii) v1-2v1+2" + tag);
        }
      }
    }
  }
  return report;
}

const std::vector<std::string>& audit_names() {
  static const std::vector<std::string> names = {"consecutive", "extension", "maximality",
                                                 "nondominating"};
  return names;
}

LemmaReport run_audit_by_name(const std::string& name, const Graph& g, const AuditCaps& caps) {
  if (name == "consecutive") return audit_consecutive(g, caps);
  if (name == "extension") return audit_extension(g, caps);
  if (name == "maximality") return audit_maximality(g);
  if (name == "nondominating") return audit_nondominating(g, caps);
  throw std::invalid_argument("unknown audit: " + name);
}

}  // namespace domcyc
