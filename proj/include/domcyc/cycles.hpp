#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "domcyc/graph.hpp"

namespace domcyc {

/// Cyclic vertex sequence with h-th successor/predecessor arithmetic.
/// Consecutive members (cyclically) are adjacent in the host graph passed at
/// construction; the orientation is the sequence order.
class OrientedCycle {
 public:
  OrientedCycle(const Graph& host, std::vector<int> seq);

  int length() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  VertexSet vertex_set() const { return VertexSet(mask_); }
  bool on_cycle(int v) const { return v >= 0 && v < kMaxOrder && pos_[v] >= 0; }

  /// v^{+h}; h may be negative or exceed the length (reduced mod length).
  int successor(int v, int h = 1) const;
  /// v^{-h}
  int predecessor(int v, int h = 1) const { return successor(v, -h); }

  /// X^{+h} (negative h gives X^{-h}); X must lie on the cycle.
  VertexSet shifted(VertexSet x, int h) const;

  /// Vertices of u -> C -> v following the orientation, inclusive of both ends.
  std::vector<int> arc(int u, int v) const;

  /// True iff the sequence is a valid cycle of g (used when a cycle built on
  /// one host is applied to another graph).
  bool valid_in(const Graph& g) const;

 private:
  int position_of(int v) const;

  std::vector<int> seq_;
  std::array<int8_t, kMaxOrder> pos_;
  uint64_t mask_ = 0;
};

struct CycleStats {
  int mu = 0;     // max component order of G - C (0 iff C is Hamiltonian)
  int omega = 0;  // number of components attaining mu
};

/// Exact maximum cycle length; 0 for acyclic graphs. Depth-first path
/// extension over bit sets with reachability pruning.
int circumference(const Graph& g);

/// Visits every maximum-length cycle exactly once up to rotation and
/// reflection, in lexicographic order of the canonical sequence (least
/// rotation/reflection starting at the least vertex). visit returning false
/// stops the stream. No-op when circumference(g) < 3.
void for_each_longest_cycle(const Graph& g, const std::function<bool(const OrientedCycle&)>& visit);

std::vector<OrientedCycle> all_longest_cycles(const Graph& g);

/// Same contract as for_each_longest_cycle for one exact length >= 3.
void for_each_cycle_of_length(const Graph& g, int length,
                              const std::function<bool(const OrientedCycle&)>& visit);

/// Every edge of g is incident with a cycle vertex, i.e. the off-cycle
/// vertices form an independent set.
bool is_dominating(const Graph& g, const OrientedCycle& c);

/// Some longest cycle is dominating (short-circuit scan).
bool has_dominating_longest_cycle(const Graph& g);

/// Some cycle of any length >= 3 is dominating; lengths are searched downward
/// from the circumference.
bool has_dominating_cycle(const Graph& g);

CycleStats cycle_stats(const Graph& g, const OrientedCycle& c);

/// Among all longest cycles, one minimizing (mu, omega) lexicographically;
/// ties go to the first cycle in canonical-form order. Throws on acyclic or
/// circumference < 3 graphs.
std::pair<OrientedCycle, CycleStats> select_extremal_cycle(const Graph& g);

/// True iff some (a,b)-path of length >= 1 has all internal vertices off c
/// (the direct edge ab counts). a and b must be distinct cycle vertices.
bool c_path_exists(const Graph& g, const OrientedCycle& c, int a, int b);

}  // namespace domcyc
