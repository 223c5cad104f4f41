#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domcyc/audit.hpp"
#include "domcyc/catalog.hpp"
#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/graph6.hpp"
#include "oracles.hpp"

using namespace domcyc;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph k222() {
  return Graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                   {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

}  // namespace

TEST_CASE("consecutive audit: gating and clean runs") {
  LemmaReport c5 = audit_consecutive(cycle_graph(5));
  CHECK(c5.hypothesis_met);  // C5 has no induced P5
  CHECK(c5.passed());

  LemmaReport c6 = audit_consecutive(cycle_graph(6));
  CHECK_FALSE(c6.hypothesis_met);  // C6 contains an induced P5: skipped, not passed
  CHECK(c6.instances == 0);

  CHECK_FALSE(contains_induced(k222(), path_graph(5)));
  LemmaReport octa = audit_consecutive(k222());
  CHECK(octa.hypothesis_met);
  CHECK(octa.passed());
}

TEST_CASE("consecutive audit samples deterministically above the full-enumeration cap") {
  // complete 5-partite graph on 10 vertices: P5-free, big path space
  std::vector<int> parts = {2, 2, 2, 2, 2};
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  Graph g(10, edges);

  AuditCaps caps;
  caps.seed = 42;
  LemmaReport a = audit_consecutive(g, caps);
  CHECK(a.hypothesis_met);
  CHECK(a.sampled);
  CHECK(a.passed());
  CHECK(a.instances > 0);

  LemmaReport b = audit_consecutive(g, caps);
  CHECK(a.instances == b.instances);  // same seed, same draws

  caps.full_enum_max_order = 10;  // force the exhaustive path on the same graph
  LemmaReport full = audit_consecutive(g, caps);
  CHECK_FALSE(full.sampled);
  CHECK(full.passed());
}

TEST_CASE("extension audit: gating, vacuous cases, clean runs") {
  // Hamiltonian graphs leave no component: hypothesis fails
  LemmaReport ham = audit_extension(complete_graph(5));
  CHECK_FALSE(ham.hypothesis_met);

  // graphs with an induced P5 are skipped
  LemmaReport p6 = audit_extension(path_graph(6));
  CHECK_FALSE(p6.hypothesis_met);

  // K2,3: longest cycle C4 leaves one vertex; with V(H) inside N(v) for every
  // attachment the per-vertex predicate is vacuous but the audit still runs
  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  LemmaReport k = audit_extension(k23);
  CHECK(k.hypothesis_met);
  CHECK(k.passed());

  for (int n = 4; n <= 7; ++n)
    enumerate_graphs(n, EnumFilter::all, [&](const Graph& g) {
      CHECK(audit_extension(g).passed());
      return true;
    });
}

TEST_CASE("maximality audit: Petersen and exhaustive small orders") {
  LemmaReport pet = audit_maximality(oracles::petersen());
  CHECK(pet.hypothesis_met);
  CHECK(pet.passed());
  CHECK(pet.instances > 0);

  LemmaReport ham = audit_maximality(cycle_graph(5));
  CHECK_FALSE(ham.hypothesis_met);  // Hamiltonian: no component to audit

  for (int n = 4; n <= 7; ++n)
    enumerate_graphs(n, EnumFilter::all, [&](const Graph& g) {
      CHECK(audit_maximality(g).passed());
      return true;
    });
}

TEST_CASE("nondominating audit: gating and the order-8 witnesses") {
  LemmaReport pet = audit_nondominating(oracles::petersen());
  CHECK_FALSE(pet.hypothesis_met);  // its longest cycles dominate

  Graph theta = graph6_decode("G?LSf?");
  LemmaReport t = audit_nondominating(theta);
  CHECK(t.hypothesis_met);
  CHECK(t.passed());
  // theta contains an induced P5; only predicate (a) applies there
  CHECK(contains_induced(theta, path_graph(5)));

  // a P5-free qualifying graph exercises (b) and (c) as well
  Graph p5free = graph6_decode("G@QF~w");
  CHECK_FALSE(contains_induced(p5free, path_graph(5)));
  LemmaReport q = audit_nondominating(p5free);
  CHECK(q.hypothesis_met);
  CHECK(q.passed());

  // exactly 26 qualifying graphs among the 2-connected orders 3..8
  long qualifying = 0;
  for (int n = 4; n <= 8; ++n)
    enumerate_graphs(n, EnumFilter::two_connected, [&](const Graph& g) {
      LemmaReport r = audit_nondominating(g);
      CHECK(r.passed());
      qualifying += r.hypothesis_met;
      return true;
    });
  CHECK(qualifying == 26);
}

TEST_CASE("nondominating audit over the 2-connected P5-free population to n=9") {
  // the framework's home turf; also pins how many qualifying graphs exist
  long p5free = 0, qualifying = 0;
  Graph p5 = path_graph(5);
  for (int n = 3; n <= 9; ++n)
    enumerate_graphs(n, EnumFilter::two_connected, [&](const Graph& g) {
      if (contains_induced(g, p5)) return true;
      ++p5free;
      LemmaReport r = audit_nondominating(g);
      CHECK(r.passed());
      qualifying += r.hypothesis_met;
      return true;
    });
  CHECK(p5free == 26173);
  CHECK(qualifying == 58);
}

TEST_CASE("audit lookup by name") {
  CHECK(audit_names().size() == 4);
  for (const std::string& name : audit_names())
    CHECK(run_audit_by_name(name, complete_graph(4)).lemma == name);
  CHECK_THROWS_AS(run_audit_by_name("bogus", complete_graph(4)), std::invalid_argument);
}
