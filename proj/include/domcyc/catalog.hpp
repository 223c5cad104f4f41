#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domcyc/graph.hpp"

namespace domcyc {

// Deterministically labeled constructions for the named forbidden graphs.
Graph path_graph(int n);
Graph complete_graph(int n);
Graph claw();                       // K1,3: center 0, leaves 1..3
Graph diamond();                    // K4-: K4 minus the edge 2-3
Graph zee_graph(int n);             // Z_n: triangle 0,1,2 + path of n edges at 2
Graph bee_graph(int m, int n);      // B_{m,n}: triangle + paths of m and n edges at 1 and 2
Graph net_graph(int l, int m, int n);  // N_{l,m,n}: triangle + one path per corner
Graph bowtie();                     // W: two triangles sharing vertex 0
Graph bowtie_star();                // W*: bowtie + pendant edge at the shared vertex
Graph subdivided_claw();            // K1,3*: claw with every edge subdivided once
Graph subdivided_claw_minus_leaf(); // K1,3**

/// Named catalog of the forbidden graphs. Fixed names: W, W*, K1_3, K1_3*,
/// K1_3**, K4-. Parametric names: P<n>, K<n>, Z<n>, B<m>_<n>, N<l>_<m>_<n>
/// (path parameters count edges of the attached path, so Z1 is the paw).
/// Any name may be replaced from an override file of graph6 strings.
class ForbiddenCatalog {
 public:
  ForbiddenCatalog() = default;

  /// Override file: one entry per line, NAME <whitespace> GRAPH6. Blank lines
  /// and lines starting with '#' are ignored. Unknown names are rejected, as
  /// are disconnected or order-<3 replacement graphs.
  static ForbiddenCatalog with_overrides(const std::string& path);

  /// Resolves a catalog name (throws std::invalid_argument for unknown names).
  Graph resolve(const std::string& name) const;

  bool has_override(const std::string& name) const { return overrides_.count(name) > 0; }

  /// The names materialized for fingerprinting: the members of the seven
  /// maximal pairs plus K3, plus every overridden name.
  std::vector<std::string> core_names() const;

  /// FNV-1a over "name=graph6" lines of core_names(), as fixed-width hex.
  std::string fingerprint() const;

 private:
  std::map<std::string, Graph> overrides_;
};

/// True iff some vertex subset of g induces a graph isomorphic to h.
/// Backtracking injection with degree and neighborhood-bit pruning; pattern
/// vertices are tried in descending-degree order.
bool contains_induced(const Graph& g, const Graph& h);

/// True iff no member of family occurs in g as an induced subgraph.
bool is_family_free(const Graph& g, const std::vector<Graph>& family);

/// f1 <= f2: every member of f2 contains some member of f1 induced.
bool family_leq(const std::vector<Graph>& f1, const std::vector<Graph>& f2);

struct NamedPair {
  std::array<std::string, 2> names;
  std::array<Graph, 2> graphs;
};

/// The seven maximal pairs: {K1_3,Z4}, {K1_3,B1_2}, {K1_3,N1_1_1}, {P4,W},
/// {K1_3*,Z1}, {P5,W*}, {P5,K4-}.
std::vector<NamedPair> maximal_pairs(const ForbiddenCatalog& catalog);

struct PairVerdict {
  std::vector<std::array<std::string, 2>> dominated_by;  // names of maximal pairs
  bool covered = false;                                  // <=> dominated_by nonempty
};

/// Positions a pair of connected graphs (order >= 3 each) against the seven
/// maximal pairs via family_leq.
PairVerdict classify_pair(const Graph& a, const Graph& b, const ForbiddenCatalog& catalog);

}  // namespace domcyc
