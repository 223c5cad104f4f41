#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "domcyc/catalog.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/graph6.hpp"
#include "oracles.hpp"

using namespace domcyc;

namespace {

long count_classes(int n, EnumFilter f) {
  long count = 0;
  enumerate_graphs(n, f, [&](const Graph&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace

TEST_CASE("class counts on small orders") {
  CHECK(count_classes(4, EnumFilter::all) == 11);
  CHECK(count_classes(4, EnumFilter::connected) == 6);
  CHECK(count_classes(4, EnumFilter::two_connected) == 3);
  CHECK(count_classes(5, EnumFilter::connected) == 21);
  CHECK(count_classes(5, EnumFilter::two_connected) == 10);
  CHECK(count_classes(6, EnumFilter::all) == 156);
}

TEST_CASE("the three 2-connected classes on 4 vertices are C4, the diamond, K4") {
  std::vector<Graph> got;
  enumerate_graphs(4, EnumFilter::two_connected, [&](const Graph& g) {
    got.push_back(g);
    return true;
  });
  REQUIRE(got.size() == 3);
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Graph> expect = {c4, diamond(), complete_graph(4)};
  for (const Graph& e : expect) {
    bool found = false;
    for (const Graph& g : got) found |= oracles::isomorphic(g, e);
    CHECK(found);
  }
}

TEST_CASE("representatives are pairwise non-isomorphic and lex-minimal") {
  for (int n = 4; n <= 6; ++n) {
    std::vector<Graph> all;
    enumerate_graphs(n, EnumFilter::all, [&](const Graph& g) {
      CHECK(has_lexmin_adjacency_string(g));
      all.push_back(g);
      return true;
    });
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(oracles::isomorphic(all[i], all[j]));
  }
  // spot check: a non-minimal labeling is recognized as such
  CHECK_FALSE(has_lexmin_adjacency_string(Graph(3, {{0, 1}})));
  CHECK(has_lexmin_adjacency_string(Graph(3, {{1, 2}})));
}

TEST_CASE("early stop and range validation") {
  int seen = 0;
  enumerate_graphs(5, EnumFilter::all, [&](const Graph&) { return ++seen < 10; });
  CHECK(seen == 10);
  CHECK_THROWS_AS(enumerate_graphs(2, EnumFilter::all, [](const Graph&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(11, EnumFilter::all, [](const Graph&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("parallel fan-out emits the exact serial order") {
  for (int n : {5, 7, 8}) {
    std::vector<std::string> serial, parallel;
    enumerate_graphs(n, EnumFilter::connected, [&](const Graph& g) {
      serial.push_back(graph6_encode(g));
      return true;
    });
    enumerate_graphs_parallel(n, EnumFilter::connected, 4, [&](const Graph& g) {
      parallel.push_back(graph6_encode(g));
      return true;
    });
    CHECK(serial == parallel);
  }
}
