#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domcyc/audit.hpp"
#include "domcyc/catalog.hpp"
#include "domcyc/graph.hpp"
#include "domcyc/graph6.hpp"

namespace domcyc {

enum class CampaignKind { verify, remark, audit, search_open };
enum class DomMode { longest, any };

struct SourceSpec {
  enum class Type { enumerate_range, file } type = Type::enumerate_range;
  int n_min = 3, n_max = 9;                                     // enumerate_range
  std::string path;                                             // file
  MalformedPolicy on_malformed = MalformedPolicy::fail_fast;    // file
};

struct CampaignSpec {
  CampaignKind kind = CampaignKind::verify;
  DomMode mode = DomMode::longest;
  std::vector<std::pair<std::string, Graph>> family;  // verify; search_open fills its own
  SourceSpec source;
  uint64_t seed = 0;
  int multipartite_max = 12;        // remark: partition shapes up to this total
  std::vector<std::string> lemmas;  // audit; empty = all four
  AuditCaps caps;                   // audit
};

struct Counterexample {
  std::string graph6;
  std::string check;      // which assertion failed
  std::string diagnosis;  // replayable witness detail
};

struct LemmaTotals {
  uint64_t graphs_checked = 0;
  uint64_t graphs_skipped = 0;  // hypothesis not met
  uint64_t instances = 0;
  uint64_t violations = 0;
  bool sampled = false;
};

/// Aggregate result of one campaign. The serialized JSON is byte-stable for
/// fixed inputs and seed, independent of the worker count, so wall time lives
/// only in the CSV summary and the console.
struct VerificationReport {
  nlohmann::json campaign;  // echo of the spec (job count deliberately absent)
  uint64_t scanned = 0;
  uint64_t passed_filters = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, LemmaTotals> lemmas;  // audit campaigns only
  std::vector<std::string> notes;
  std::string catalog_fingerprint;
  double timing_ms = 0;

  bool clean() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// DOMCYC_JOBS env var, else the OpenMP default.
int default_jobs();

/// Runs a campaign with per-graph fan-out over `jobs` workers (jobs <= 1 runs
/// the serial reference path) and an index-ordered merge. jobs == 0 means
/// default_jobs().
VerificationReport run_campaign(const CampaignSpec& spec, const ForbiddenCatalog& catalog,
                                int jobs = 0);

/// Re-runs a report's assertions on its own counterexample graphs. The result
/// lists the still-failing ones; reproduction holds iff the count matches.
VerificationReport run_replay(const nlohmann::json& original_report,
                              const ForbiddenCatalog& catalog, int jobs = 0);

nlohmann::json pair_verdict_to_json(const std::array<std::string, 2>& names,
                                    const PairVerdict& verdict);

/// Human-readable account of which maximal pairs dominate the input pair and
/// through which induced containments.
std::string explain_pair_verdict(const std::array<std::string, 2>& names, const Graph& a,
                                 const Graph& b, const PairVerdict& verdict,
                                 const ForbiddenCatalog& catalog);

}  // namespace domcyc
