// Acceptance suite: runs every criterion at its stated scale and prints one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "domcyc/campaign.hpp"
#include "domcyc/catalog.hpp"
#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/graph6.hpp"
#include "oracles.hpp"

using namespace domcyc;

#ifndef DOMCYC_TEST_DATA
#define DOMCYC_TEST_DATA "tests/data"
#endif

namespace {

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
  printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerificationReport verify_pair(const ForbiddenCatalog& cat, const std::string& a,
                               const std::string& b, DomMode mode, int n_max, int jobs) {
  CampaignSpec spec;
  spec.kind = CampaignKind::verify;
  spec.mode = mode;
  spec.family = {{a, cat.resolve(a)}, {b, cat.resolve(b)}};
  spec.source = {SourceSpec::Type::enumerate_range, 3, n_max};
  return run_campaign(spec, cat, jobs);
}

std::string stats(const VerificationReport& r) {
  char buf[160];
  snprintf(buf, sizeof buf, "scanned %llu, passed %llu, counterexamples %zu, %.1f s",
           (unsigned long long)r.scanned, (unsigned long long)r.passed_filters,
           r.counterexamples.size(), r.timing_ms / 1000.0);
  return buf;
}

// ---- canonical-bucketing oracle for criterion 7 ----------------------------
// Buckets every labeled graph on n vertices by the minimum of its upper-
// triangle bit string over all vertex permutations, then counts the connected
// buckets. Independent of the enumerator's pruned generation.
long count_connected_classes_oracle(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::array<int, 2>> pair_of(bits);
  {
    int idx = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pair_of[idx++] = {i, j};
  }
  auto bit_index = [&](int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
  };

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  const int chunks = (bits + 7) / 8;
  std::vector<uint32_t> luts;  // [perm][chunk][byte]
  size_t per_perm = static_cast<size_t>(chunks) * 256;
  do {
    size_t base = luts.size();
    luts.resize(base + per_perm, 0);
    for (int b = 0; b < bits; ++b) {
      int i = perm[pair_of[b][0]], j = perm[pair_of[b][1]];
      if (i > j) std::swap(i, j);
      uint32_t dst = uint32_t{1} << bit_index(i, j);
      int chunk = b / 8, off = b % 8;
      for (int byte = 0; byte < 256; ++byte)
        if ((byte >> off) & 1) luts[base + chunk * 256 + byte] |= dst;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const size_t nperms = luts.size() / per_perm;

  std::set<uint32_t> canon_forms;
  const uint32_t total = uint32_t{1} << bits;
#pragma omp parallel
  {
    std::set<uint32_t> local;
    std::array<uint64_t, 8> rows;
#pragma omp for schedule(dynamic, 4096)
    for (int64_t mask64 = 0; mask64 < (int64_t)total; ++mask64) {
      uint32_t mask = static_cast<uint32_t>(mask64);
      rows.fill(0);
      for (int b = 0; b < bits; ++b)
        if ((mask >> b) & 1) {
          rows[pair_of[b][0]] |= uint64_t{1} << pair_of[b][1];
          rows[pair_of[b][1]] |= uint64_t{1} << pair_of[b][0];
        }
      // connectivity by mask expansion
      uint64_t comp = 1, frontier = 1;
      while (frontier) {
        uint64_t grown = comp;
        for (int v = 0; v < n; ++v)
          if ((frontier >> v) & 1) grown |= rows[v];
        frontier = grown & ~comp;
        comp = grown;
      }
      if (comp != (uint64_t{1} << n) - 1) continue;
      uint32_t best = mask;
      for (size_t p = 0; p < nperms; ++p) {
        const uint32_t* lut = &luts[p * per_perm];
        uint32_t image = 0;
        for (int c = 0; c < chunks; ++c) image |= lut[c * 256 + ((mask >> (8 * c)) & 0xff)];
        if (image < best) best = image;
      }
      local.insert(best);
    }
#pragma omp critical
    canon_forms.insert(local.begin(), local.end());
  }
  return static_cast<long>(canon_forms.size());
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

int main() {
  ForbiddenCatalog cat;
  int jobs = default_jobs();
  printf("acceptance run: %d job(s), catalog %s\n", jobs, cat.fingerprint().c_str());

  {  // 1: {P5, K4-} dominating-longest on 3..9
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = verify_pair(cat, "P5", "K4-", DomMode::longest, 9, jobs);
    bool ok = r.clean() && seconds_since(t0) < 600.0;
    line(1, ok, "every 2-connected {P5,K4-}-free graph on 3..9 vertices has a dominating longest cycle",
         stats(r));
  }
  {  // 2: {P5, W*}
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = verify_pair(cat, "P5", "W*", DomMode::longest, 9, jobs);
    bool ok = r.clean() && seconds_since(t0) < 600.0;
    line(2, ok, "every 2-connected {P5,W*}-free graph on 3..9 vertices has a dominating longest cycle",
         stats(r));
  }
  {  // 3: the five dominating-cycle pairs
    const std::array<std::array<const char*, 2>, 5> pairs = {{
        {"K1_3", "Z4"}, {"K1_3", "B1_2"}, {"K1_3", "N1_1_1"}, {"P4", "W"}, {"K1_3**", "Z1"}}};
    bool ok = true;
    std::string detail;
    for (const auto& p : pairs) {
      VerificationReport r = verify_pair(cat, p[0], p[1], DomMode::any, 9, jobs);
      ok = ok && r.clean();
      detail += std::string(p[0]) + "," + p[1] + ":" + std::to_string(r.counterexamples.size()) +
                " ";
    }
    line(3, ok, "five pair campaigns on 3..9 vertices find dominating cycles", detail + "counterexamples");
  }
  {  // 4: remark checks
    CampaignSpec spec;
    spec.kind = CampaignKind::remark;
    spec.multipartite_max = 12;
    spec.source = {SourceSpec::Type::enumerate_range, 3, 8};
    VerificationReport r = run_campaign(spec, cat, jobs);
    line(4, r.clean(),
         "complete multipartite shapes to 12 vertices dominate; connected paw-free "
         "triangle graphs to 8 vertices are complete multipartite",
         stats(r));
  }
  {  // 5: lemma audits, exhaustive 3..8 plus 10,000 seeded random graphs to n=12
    CampaignSpec spec;
    spec.kind = CampaignKind::audit;
    spec.source = {SourceSpec::Type::enumerate_range, 3, 8};
    spec.seed = 1;
    VerificationReport ex = run_campaign(spec, cat, jobs);

    const uint64_t seed = 20260810;
    std::string path = "/tmp/domcyc_acceptance_random.g6";
    {
      std::mt19937_64 rng(seed);
      std::ofstream out(path);
      for (int i = 0; i < 10000; ++i) {
        int n = 3 + static_cast<int>(rng() % 10);
        double p = 0.1 + 0.8 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        out << graph6_encode(random_graph(rng, n, p)) << "\n";
      }
    }
    CampaignSpec rnd;
    rnd.kind = CampaignKind::audit;
    rnd.source = {SourceSpec::Type::file, 0, 0, path, MalformedPolicy::fail_fast};
    rnd.seed = seed;
    VerificationReport rr = run_campaign(rnd, cat, jobs);

    bool ok = ex.clean() && rr.clean() && rr.scanned == 10000;
    line(5, ok, "all lemma predicates hold on 3..8 exhaustively and on 10,000 random graphs to n=12",
         "violations " + std::to_string(ex.counterexamples.size()) + "+" +
             std::to_string(rr.counterexamples.size()));
    for (const auto& [name, t] : ex.lemmas) {
      const LemmaTotals& q = rr.lemmas.at(name);
      printf("       %-14s exhaustive checked/skipped %llu/%llu inst %llu | random %llu/%llu inst %llu%s\n",
             name.c_str(), (unsigned long long)t.graphs_checked,
             (unsigned long long)t.graphs_skipped, (unsigned long long)t.instances,
             (unsigned long long)q.graphs_checked, (unsigned long long)q.graphs_skipped,
             (unsigned long long)q.instances, q.sampled ? " (sampled)" : "");
    }
  }
  {  // 6: oracle equivalences
    std::vector<Graph> hs;
    for (const std::string& name : cat.core_names()) hs.push_back(cat.resolve(name));
    std::vector<Graph> hosts = {Graph(0), Graph(1), Graph(2), Graph(2, {{0, 1}})};
    for (int n = 3; n <= 8; ++n)
      enumerate_graphs(n, EnumFilter::all, [&](const Graph& g) {
        hosts.push_back(g);
        return true;
      });
    long contain_checks = 0, circ_checks = 0;
    bool ok = true;
    auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) reduction(+ : contain_checks, circ_checks)
    for (long i = 0; i < static_cast<long>(hosts.size()); ++i) {
      const Graph& g = hosts[i];
      for (const Graph& h : hs) {
        ok = ok && (contains_induced(g, h) == oracles::contains_induced_subsets(g, h));
        ++contain_checks;
      }
      ok = ok && (circumference(g) == oracles::circumference_subsets(g));
      ++circ_checks;
    }
    char buf[128];
    snprintf(buf, sizeof buf, "%ld containment and %ld circumference agreements, %.1f s",
             contain_checks, circ_checks, seconds_since(t0));
    line(6, ok, "containment and circumference match their brute-force oracles on all graphs to n=8",
         buf);
  }
  {  // 7: enumerator counts against the canonical-bucketing oracle
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 7; ++n) {
      long enumerated = 0;
      enumerate_graphs(n, EnumFilter::connected, [&](const Graph&) {
        ++enumerated;
        return true;
      });
      long bucketed = count_connected_classes_oracle(n);
      ok = ok && enumerated == bucketed;
      detail += "n=" + std::to_string(n) + ":" + std::to_string(enumerated) + "/" +
                std::to_string(bucketed) + " ";
    }
    line(7, ok, "connected class counts for n=4..7 equal the canonical-bucketing oracle", detail);
  }
  {  // 8: graph6 codec
    bool ok = true;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
      int n = static_cast<int>(rng() % 21);
      Graph g = random_graph(rng, n, 0.35);
      ok = ok && graph6_decode(graph6_encode(g)) == g;
    }
    int fixtures = 0;
    std::ifstream in(std::string(DOMCYC_TEST_DATA) + "/golden.g6");
    ok = ok && in.good();
    std::string rec;
    while (std::getline(in, rec)) {
      if (rec.empty() || rec[0] == '#') continue;
      ok = ok && graph6_encode(graph6_decode(rec)) == rec;
      ++fixtures;
    }
    ok = ok && fixtures == 7;
    ok = ok && graph6_decode("D??") == Graph(5);
    try {  // the bad-length error contract: one payload group short
      graph6_decode("D?");
      ok = false;
    } catch (const Graph6Error&) {
    }
    ok = ok && graph6_decode("C~") == complete_graph(4);
    ok = ok && graph6_decode("Cl") == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    line(8, ok, "graph6 round-trips on 1000 random graphs, the golden fixtures, and D?? C~ Cl",
         std::to_string(fixtures) + " fixtures");
  }
  {  // 9: open-question search to n=10
    CampaignSpec spec;
    spec.kind = CampaignKind::search_open;
    spec.source = {SourceSpec::Type::enumerate_range, 3, 10};
    VerificationReport r = run_campaign(spec, cat, jobs);
    bool caveat = false;
    for (const std::string& note : r.notes) caveat |= note.find("not a proof") != std::string::npos;
    bool ok = r.clean() && caveat && r.scanned > 0 && r.passed_filters > 0;
    line(9, ok, "search for a {K1_3*,K3}-free counterexample completes on 3..10 and reports populations",
         stats(r));
  }
  {  // 10: byte-identical reports across job counts
    VerificationReport v1 = verify_pair(cat, "P5", "W*", DomMode::longest, 7, 1);
    VerificationReport v4 = verify_pair(cat, "P5", "W*", DomMode::longest, 7, 4);
    CampaignSpec a;
    a.kind = CampaignKind::audit;
    a.source = {SourceSpec::Type::enumerate_range, 3, 6};
    a.seed = 5;
    VerificationReport a1 = run_campaign(a, cat, 1);
    VerificationReport a3 = run_campaign(a, cat, 3);
    bool ok = v1.to_json().dump(2) == v4.to_json().dump(2) &&
              a1.to_json().dump(2) == a3.to_json().dump(2);
    line(10, ok, "reports are byte-identical for jobs 1 vs 4 (verify) and 1 vs 3 (audit)",
         ok ? "identical" : "mismatch");
  }

  printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
         failures);
  return failures == 0 ? 0 : 1;
}
