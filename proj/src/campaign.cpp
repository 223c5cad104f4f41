#include "domcyc/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/version.hpp"

namespace domcyc {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// content hash so audit sampling seeds survive replay in any order
uint64_t graph_hash(const Graph& g) {
  uint64_t h = 0xcbf29ce484222325ull ^ static_cast<uint64_t>(g.order());
  for (int v = 0; v < g.order(); ++v) {
    h ^= g.neighbors(v).bits();
    h *= 0x100000001b3ull;
  }
  return h;
}

const char* kind_name(CampaignKind k) {
  switch (k) {
    case CampaignKind::verify: return "verify";
    case CampaignKind::remark: return "remark";
    case CampaignKind::audit: return "audit";
    case CampaignKind::search_open: return "search-open";
  }
  return "?";
}

CampaignKind kind_from(const std::string& s) {
  if (s == "verify") return CampaignKind::verify;
  if (s == "remark") return CampaignKind::remark;
  if (s == "audit") return CampaignKind::audit;
  if (s == "search-open") return CampaignKind::search_open;
  throw std::invalid_argument("unknown campaign kind: " + s);
}

struct WorkItem {
  Graph g;
  std::string label;  // nonempty for internally built graphs (partition shapes)
};

struct ItemResult {
  bool passed = false;
  std::vector<Counterexample> fails;
  std::vector<LemmaReport> lemma_reports;
  std::string error;
};

struct Worker {
  const CampaignSpec& spec;
  std::vector<Graph> family_graphs;
  Graph paw;

  explicit Worker(const CampaignSpec& s) : spec(s), paw(zee_graph(1)) {
    for (const auto& [name, g] : spec.family) family_graphs.push_back(g);
  }

  ItemResult process(const WorkItem& item) const {
    ItemResult result;
    const Graph& g = item.g;
    switch (spec.kind) {
      case CampaignKind::verify:
      case CampaignKind::search_open: {
        if (!is_two_connected(g) || !is_family_free(g, family_graphs)) break;
        result.passed = true;
        bool longest = spec.mode == DomMode::longest;
        bool ok = longest ? has_dominating_longest_cycle(g) : has_dominating_cycle(g);
        if (!ok)
          result.fails.push_back({graph6_encode(g),
                                  longest ? "dominating-longest-cycle" : "dominating-cycle",
                                  std::string("2-connected family-free graph without a ") +
                                      (longest ? "dominating longest cycle" : "dominating cycle") +
                                      item.label});
        break;
      }
      case CampaignKind::remark: {
        if (is_two_connected(g) && has_triangle(g) && is_complete_multipartite(g)) {
          result.passed = true;
          if (!has_dominating_cycle(g))
            result.fails.push_back({graph6_encode(g), "multipartite-dominating",
                                    "2-connected complete multipartite graph with a triangle "
                                    "but no dominating cycle" +
                                        item.label});
        }
        if (is_connected(g) && has_triangle(g) && !contains_induced(g, paw)) {
          result.passed = true;
          if (!is_complete_multipartite(g))
            result.fails.push_back({graph6_encode(g), "multipartite-structure",
                                    "connected paw-free graph with a triangle that is not "
                                    "complete multipartite" +
                                        item.label});
        }
        break;
      }
      case CampaignKind::audit: {
        AuditCaps caps = spec.caps;
        caps.seed = splitmix64(spec.seed ^ graph_hash(g));
        const std::vector<std::string>& names = spec.lemmas.empty() ? audit_names() : spec.lemmas;
        for (const std::string& name : names) {
          LemmaReport rep = run_audit_by_name(name, g, caps);
          if (rep.hypothesis_met) result.passed = true;
          for (const std::string& w : rep.witnesses)
            result.fails.push_back({graph6_encode(g), "lemma:" + name, w});
          result.lemma_reports.push_back(std::move(rep));
        }
        break;
      }
    }
    return result;
  }
};

// Per-graph fan-out with an index-ordered merge: reports are identical for
// any worker count. jobs <= 1 keeps the plain serial loop.
class Executor {
 public:
  Executor(const Worker& worker, int jobs, VerificationReport* report)
      : worker_(worker), jobs_(jobs), report_(report) {}

  void push(Graph g, std::string label = "") {
    chunk_.push_back({std::move(g), std::move(label)});
    if (chunk_.size() >= kChunk) flush();
  }

  void finish() { flush(); }

 private:
  static constexpr size_t kChunk = 1024;

  void flush() {
    if (chunk_.empty()) return;
    const long count = static_cast<long>(chunk_.size());
    std::vector<ItemResult> results(chunk_.size());
    if (jobs_ <= 1) {
      for (long i = 0; i < count; ++i) results[i] = worker_.process(chunk_[i]);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs_)
      for (long i = 0; i < count; ++i) {
        try {
          results[i] = worker_.process(chunk_[i]);
        } catch (const std::exception& e) {
          results[i].error = e.what();
        }
      }
    }
    for (ItemResult& r : results) {
      if (!r.error.empty()) throw std::runtime_error("worker failed: " + r.error);
      ++report_->scanned;
      if (r.passed) ++report_->passed_filters;
      for (Counterexample& c : r.fails) report_->counterexamples.push_back(std::move(c));
      for (LemmaReport& rep : r.lemma_reports) {
        LemmaTotals& t = report_->lemmas[rep.lemma];
        if (rep.hypothesis_met)
          ++t.graphs_checked;
        else
          ++t.graphs_skipped;
        t.instances += rep.instances;
        t.violations += rep.violations;
        t.sampled = t.sampled || rep.sampled;
      }
    }
    chunk_.clear();
  }

  const Worker& worker_;
  int jobs_;
  VerificationReport* report_;
  std::vector<WorkItem> chunk_;
};

void for_each_partition_shape(int max_total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      fn(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  for (int total = 1; total <= max_total; ++total) rec(rec, total, total);
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int next = base + parts[i];
    for (int u = base; u < next; ++u)
      for (int v = next; v < n; ++v) edges.emplace_back(u, v);
    base = next;
  }
  return Graph(n, edges);
}

std::string partition_label(const std::vector<int>& parts) {
  std::ostringstream out;
  out << " [K(";
  for (size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ")]";
  return out.str();
}

nlohmann::json echo_spec(const CampaignSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["seed"] = spec.seed;
  if (spec.kind == CampaignKind::verify || spec.kind == CampaignKind::search_open) {
    j["mode"] = spec.mode == DomMode::longest ? "longest" : "any";
    nlohmann::json family = nlohmann::json::array();
    for (const auto& [name, g] : spec.family)
      family.push_back({{"name", name}, {"graph6", graph6_encode(g)}});
    j["family"] = family;
  }
  if (spec.kind == CampaignKind::remark) j["multipartite_max"] = spec.multipartite_max;
  if (spec.kind == CampaignKind::audit) {
    j["lemmas"] = spec.lemmas.empty() ? audit_names() : spec.lemmas;
    j["caps"] = {{"full_enum_max_order", spec.caps.full_enum_max_order},
                 {"q1_samples", spec.caps.q1_samples},
                 {"q2_samples", spec.caps.q2_samples},
                 {"s_budget", spec.caps.s_budget}};
  }
  if (spec.source.type == SourceSpec::Type::enumerate_range) {
    j["source"] = {{"type", "enumerate"}, {"n_min", spec.source.n_min}, {"n_max", spec.source.n_max}};
  } else {
    j["source"] = {{"type", "file"},
                   {"path", spec.source.path},
                   {"on_malformed",
                    spec.source.on_malformed == MalformedPolicy::fail_fast ? "fail" : "skip"}};
  }
  return j;
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("DOMCYC_JOBS")) {
    long k = std::strtol(env, nullptr, 10);
    if (k >= 1) return static_cast<int>(k);
  }
  return omp_get_max_threads();
}

VerificationReport run_campaign(const CampaignSpec& spec, const ForbiddenCatalog& catalog,
                                int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  CampaignSpec eff = spec;
  if (eff.kind == CampaignKind::search_open && eff.family.empty())
    eff.family = {{"K1_3*", catalog.resolve("K1_3*")}, {"K3", catalog.resolve("K3")}};
  if ((eff.kind == CampaignKind::verify || eff.kind == CampaignKind::search_open) &&
      eff.family.empty())
    throw std::invalid_argument("verify campaign needs a family");
  const std::vector<std::string>& known = audit_names();
  for (const std::string& name : eff.lemmas)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown audit: " + name);

  VerificationReport report;
  report.campaign = echo_spec(eff);
  report.catalog_fingerprint = catalog.fingerprint();

  auto t0 = std::chrono::steady_clock::now();
  Worker worker(eff);
  Executor exec(worker, jobs, &report);

  if (eff.kind == CampaignKind::remark) {
    for_each_partition_shape(eff.multipartite_max, [&](const std::vector<int>& parts) {
      exec.push(complete_multipartite_graph(parts), partition_label(parts));
    });
  }
  switch (eff.source.type) {
    case SourceSpec::Type::enumerate_range: {
      if (eff.source.n_min < 3 || eff.source.n_max > 10 || eff.source.n_min > eff.source.n_max)
        throw std::invalid_argument("enumerate source needs 3 <= n_min <= n_max <= 10");
      for (int n = eff.source.n_min; n <= eff.source.n_max; ++n)
        enumerate_graphs_parallel(n, EnumFilter::all, jobs, [&](const Graph& g) {
          exec.push(g);
          return true;
        });
      break;
    }
    case SourceSpec::Type::file: {
      read_graph6_file(
          eff.source.path, eff.source.on_malformed,
          [&](size_t, const Graph& g) { exec.push(g); },
          [&](size_t line_no, const std::string& msg) {
            report.notes.push_back("line " + std::to_string(line_no) + ": " + msg +
                                   (eff.source.on_malformed == MalformedPolicy::skip ? " (skipped)"
                                                                                     : ""));
          });
      break;
    }
  }
  exec.finish();

  if (eff.kind == CampaignKind::search_open) {
    report.notes.push_back(
        "finite scan: an empty violator list is consistent with the target pair belonging to "
        "the class but is not a proof");
    report.notes.push_back(
        "a bounded-order search cannot separate 'holds for all orders' from 'holds for all "
        "sufficiently large orders'");
  }

  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

VerificationReport run_replay(const nlohmann::json& original_report,
                              const ForbiddenCatalog& catalog, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  const nlohmann::json& echo = original_report.at("campaign");
  CampaignSpec spec;
  spec.kind = kind_from(echo.at("kind").get<std::string>());
  spec.seed = echo.value("seed", uint64_t{0});
  if (echo.contains("mode")) spec.mode = echo["mode"] == "any" ? DomMode::any : DomMode::longest;
  if (echo.contains("family"))
    for (const auto& member : echo["family"])
      spec.family.emplace_back(member.at("name").get<std::string>(),
                               graph6_decode(member.at("graph6").get<std::string>()));
  if (echo.contains("lemmas")) spec.lemmas = echo["lemmas"].get<std::vector<std::string>>();
  if (echo.contains("caps")) {
    const auto& caps = echo["caps"];
    spec.caps.full_enum_max_order = caps.value("full_enum_max_order", 9);
    spec.caps.q1_samples = caps.value("q1_samples", 200);
    spec.caps.q2_samples = caps.value("q2_samples", 100);
    spec.caps.s_budget = caps.value("s_budget", uint64_t{16384});
  }

  VerificationReport report;
  report.campaign = {{"kind", "replay"}, {"original", echo}};
  report.catalog_fingerprint = catalog.fingerprint();

  auto t0 = std::chrono::steady_clock::now();
  Worker worker(spec);
  Executor exec(worker, jobs, &report);
  std::vector<std::string> replayed;
  for (const auto& ce : original_report.at("counterexamples")) {
    std::string g6 = ce.at("graph6").get<std::string>();
    replayed.push_back(g6);
    exec.push(graph6_decode(g6));
  }
  exec.finish();

  for (const std::string& g6 : replayed) {
    bool refails = false;
    for (const Counterexample& ce : report.counterexamples)
      if (ce.graph6 == g6) refails = true;
    if (!refails) report.notes.push_back("not reproduced: " + g6);
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["campaign"] = campaign;
  j["catalog_fingerprint"] = catalog_fingerprint;
  j["tool_version"] = kToolVersion;
  j["scanned"] = scanned;
  j["passed_filters"] = passed_filters;
  nlohmann::json ces = nlohmann::json::array();
  for (const Counterexample& ce : counterexamples)
    ces.push_back({{"graph6", ce.graph6}, {"check", ce.check}, {"diagnosis", ce.diagnosis}});
  j["counterexamples"] = ces;
  if (!lemmas.empty()) {
    nlohmann::json lj;
    for (const auto& [name, t] : lemmas)
      lj[name] = {{"graphs_checked", t.graphs_checked}, {"graphs_skipped", t.graphs_skipped},
                  {"instances", t.instances},           {"violations", t.violations},
                  {"sampled", t.sampled}};
    j["lemmas"] = lj;
  }
  j["notes"] = notes;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "key,value\n";
  out << "kind," << campaign.value("kind", std::string("?")) << "\n";
  out << "scanned," << scanned << "\n";
  out << "passed_filters," << passed_filters << "\n";
  out << "counterexamples," << counterexamples.size() << "\n";
  out << "catalog_fingerprint," << catalog_fingerprint << "\n";
  out << "tool_version," << kToolVersion << "\n";
  out << "timing_ms," << timing_ms << "\n";
  for (const auto& [name, t] : lemmas) {
    out << "lemma." << name << ".graphs_checked," << t.graphs_checked << "\n";
    out << "lemma." << name << ".graphs_skipped," << t.graphs_skipped << "\n";
    out << "lemma." << name << ".instances," << t.instances << "\n";
    out << "lemma." << name << ".violations," << t.violations << "\n";
  }
  out << "graph6,check,diagnosis\n";
  for (const Counterexample& ce : counterexamples) {
    std::string diag = ce.diagnosis;
    for (char& c : diag)
      if (c == ',') c = ';';
    out << ce.graph6 << "," << ce.check << "," << diag << "\n";
  }
  return out.str();
}

nlohmann::json pair_verdict_to_json(const std::array<std::string, 2>& names,
                                    const PairVerdict& verdict) {
  nlohmann::json j;
  j["pair"] = names;
  j["covered"] = verdict.covered;
  nlohmann::json dom = nlohmann::json::array();
  for (const auto& m : verdict.dominated_by) dom.push_back(m);
  j["dominated_by"] = dom;
  return j;
}

std::string explain_pair_verdict(const std::array<std::string, 2>& names, const Graph& a,
                                 const Graph& b, const PairVerdict& verdict,
                                 const ForbiddenCatalog& catalog) {
  std::ostringstream out;
  out << "pair {" << names[0] << ", " << names[1] << "}: "
      << (verdict.covered ? "covered" : "NOT covered") << "\n";
  for (const auto& m : verdict.dominated_by) {
    out << "  <= {" << m[0] << ", " << m[1] << "}:";
    for (const std::string& target : m) {
      Graph host = catalog.resolve(target);
      const char* hit = contains_induced(host, a) ? names[0].c_str() : names[1].c_str();
      out << " " << hit << " induced in " << target << ";";
    }
    out << "\n";
  }
  if (!verdict.covered)
    out << "  no maximal pair dominates this pair under the <= relation\n";
  return out.str();
}

}  // namespace domcyc
