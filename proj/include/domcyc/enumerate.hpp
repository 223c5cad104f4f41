#pragma once

#include <functional>

#include "domcyc/graph.hpp"

namespace domcyc {

enum class EnumFilter { all, connected, two_connected };

/// Built-in isomorphism-free enumerator, 3 <= n <= 10. Labeled graphs are
/// grown one vertex at a time in lexicographic adjacency order; a graph is
/// kept iff its upper-triangle adjacency bit string (column order, the order
/// graph6 uses) is the lexicographic minimum over all vertex permutations.
/// Deleting the last vertex of a minimal string leaves a minimal string, so
/// non-minimal partial graphs are pruned. Exactly one representative per
/// isomorphism class passing the filter is visited, in a fixed order;
/// visit returning false stops the enumeration.
void enumerate_graphs(int n, EnumFilter filter, const std::function<bool(const Graph&)>& visit);

/// The minimality test behind the enumerator, exposed for tests.
bool has_lexmin_adjacency_string(const Graph& g);

/// Same visit order as enumerate_graphs, with the last extension level fanned
/// out over `jobs` workers (the order n-1 prefixes are the work units, merged
/// back in prefix order). jobs <= 1 is exactly enumerate_graphs.
void enumerate_graphs_parallel(int n, EnumFilter filter, int jobs,
                               const std::function<bool(const Graph&)>& visit);

}  // namespace domcyc
