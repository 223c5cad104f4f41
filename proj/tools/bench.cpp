// Compares the serial reference path (jobs=1) against the OpenMP fan-out on
// two representative workloads and checks the reports agree byte for byte.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "domcyc/campaign.hpp"

using namespace domcyc;

namespace {

double run_ms(const CampaignSpec& spec, const ForbiddenCatalog& cat, int jobs, std::string* json) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = run_campaign(spec, cat, jobs);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  *json = rep.to_json().dump(2);
  return ms;
}

int bench(const char* tag, const CampaignSpec& spec, const ForbiddenCatalog& cat, int jobs) {
  std::string serial_json, parallel_json;
  double serial = run_ms(spec, cat, 1, &serial_json);
  double parallel = run_ms(spec, cat, jobs, &parallel_json);
  bool same = serial_json == parallel_json;
  printf("%-24s serial %8.1f ms   jobs=%d %8.1f ms   speedup %.2fx   reports %s\n", tag, serial,
         jobs, parallel, serial / parallel, same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? atoi(argv[1]) : omp_get_max_threads();
  ForbiddenCatalog cat;
  int bad = 0;

  CampaignSpec verify;
  verify.kind = CampaignKind::verify;
  verify.mode = DomMode::longest;
  verify.family = {{"P5", cat.resolve("P5")}, {"K4-", cat.resolve("K4-")}};
  verify.source = {SourceSpec::Type::enumerate_range, 3, 9};
  bad += bench("verify P5,K4- n=3..9", verify, cat, jobs);

  CampaignSpec audit;
  audit.kind = CampaignKind::audit;
  audit.source = {SourceSpec::Type::enumerate_range, 3, 8};
  bad += bench("audit all n=3..8", audit, cat, jobs);

  return bad;
}
