#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domcyc/graph.hpp"

namespace domcyc {

/// Enumeration caps for hypotheses that quantify over exponentially many
/// objects. Path-pair and independent-set spaces are enumerated in full up to
/// full_enum_max_order; past that, pairs are drawn uniformly (dynamic-program
/// counting) with the fixed seed and the budgets below.
struct AuditCaps {
  int full_enum_max_order = 9;
  int q1_samples = 200;       // induced-path draws per graph in sampled mode
  int q2_samples = 100;       // second-path draws per drawn first path
  uint64_t s_budget = 16384;  // independent-set enumeration bound
  uint64_t seed = 0;
};

/// Result of one audit on one graph. A violation witness maps the predicate's
/// symbols to vertex indices so it can be replayed by hand; witness storage is
/// capped at 32 per report, violations keeps the full count.
struct LemmaReport {
  std::string lemma;
  bool hypothesis_met = false;  // false = the graph was skipped, not passed
  bool sampled = false;
  uint64_t instances = 0;  // predicate evaluations performed
  uint64_t violations = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return violations == 0; }
  void flag(std::string witness) {
    if (++violations <= 32) witnesses.push_back(std::move(witness));
  }
};

/// Path-pair predicate: in a P5-free graph, for paths Q1 (induced) and Q2 of
/// order >= 3 sharing only the end a, either some edge joins Q1-a to Q2-a or
/// all of Q2-a lies in N(a). Skipped when g contains an induced P5.
LemmaReport audit_consecutive(const Graph& g, const AuditCaps& caps = {});

/// Arc-absorption predicate: P5-free g, longest cycle C, component H of G-C,
/// v in N(H;C) with H not fully adjacent to v: any arc out of v with no H
/// attachment lies inside N(v).
LemmaReport audit_extension(const Graph& g, const AuditCaps& caps = {});

/// Longest-cycle maximality predicates: the neighborhood-shift exclusions for
/// x,y in a component H, and the C-path/edge exclusions around attachment
/// pairs v1,v2, including the two-attachment strengthenings.
LemmaReport audit_maximality(const Graph& g);

/// Framework predicates for graphs whose longest cycles are all
/// non-dominating, audited on an extremal cycle (min mu, then min omega):
/// (a) the independent-set exclusion, (b) N(H;C) disjoint from its -2 shift
/// when P5-free, (c) the v1,v2 second-predecessor exclusions when P5-free.
LemmaReport audit_nondominating(const Graph& g, const AuditCaps& caps = {});

const std::vector<std::string>& audit_names();

LemmaReport run_audit_by_name(const std::string& name, const Graph& g, const AuditCaps& caps = {});

}  // namespace domcyc
