#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcyc/campaign.hpp"
#include "domcyc/catalog.hpp"
#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/graph6.hpp"
#include "domcyc/version.hpp"

using namespace domcyc;

namespace {

struct CommonOpts {
  std::string pair_names;
  std::string family_file;
  int n_min = 3, n_max = 9;
  std::string input;
  std::string mode = "longest";
  int jobs = 0;
  uint64_t seed = 0;
  std::string catalog_override;
  std::string output;
  std::string format = "json";
  std::string on_malformed = "fail";
};

void add_source_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n-min", opts.n_min, "enumerate from this order (default 3)");
  cmd->add_option("--n-max", opts.n_max, "enumerate up to this order (default 9)");
  cmd->add_option("--input", opts.input, "graph6 file source instead of the enumerator");
  cmd->add_option("--on-malformed", opts.on_malformed, "fail|skip for bad graph6 lines")
      ->check(CLI::IsMember({"fail", "skip"}));
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--jobs", opts.jobs, "worker count (default: DOMCYC_JOBS or all cores)");
  cmd->add_option("--seed", opts.seed, "seed for sampled audit enumerations");
  cmd->add_option("--catalog-override", opts.catalog_override,
                  "file of NAME GRAPH6 lines replacing catalog entries");
  cmd->add_option("--output", opts.output, "write the report to this file");
  cmd->add_option("--format", opts.format, "json|csv report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

ForbiddenCatalog load_catalog(const CommonOpts& opts) {
  if (opts.catalog_override.empty()) return ForbiddenCatalog();
  return ForbiddenCatalog::with_overrides(opts.catalog_override);
}

SourceSpec make_source(const CommonOpts& opts) {
  SourceSpec src;
  if (!opts.input.empty()) {
    src.type = SourceSpec::Type::file;
    src.path = opts.input;
    src.on_malformed =
        opts.on_malformed == "skip" ? MalformedPolicy::skip : MalformedPolicy::fail_fast;
  } else {
    src.type = SourceSpec::Type::enumerate_range;
    src.n_min = opts.n_min;
    src.n_max = opts.n_max;
  }
  return src;
}

std::vector<std::pair<std::string, Graph>> resolve_family(const CommonOpts& opts,
                                                          const ForbiddenCatalog& catalog) {
  std::vector<std::pair<std::string, Graph>> family;
  if (!opts.pair_names.empty()) {
    size_t comma = opts.pair_names.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--pair expects NAME,NAME (catalog names use '_', e.g. K1_3)");
    std::string a = opts.pair_names.substr(0, comma);
    std::string b = opts.pair_names.substr(comma + 1);
    family = {{a, catalog.resolve(a)}, {b, catalog.resolve(b)}};
  } else if (!opts.family_file.empty()) {
    std::ifstream in(opts.family_file);
    if (!in) throw std::runtime_error("cannot open family file " + opts.family_file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("g6:", 0) == 0)
        family.emplace_back(line, graph6_decode(line.substr(3)));
      else
        family.emplace_back(line, catalog.resolve(line));
    }
    if (family.empty()) throw std::runtime_error("family file has no entries");
  }
  return family;
}

int emit_report(const VerificationReport& report, const CommonOpts& opts) {
  std::cerr << "scanned " << report.scanned << ", passed filters " << report.passed_filters
            << ", counterexamples " << report.counterexamples.size() << ", " << report.timing_ms
            << " ms\n";
  for (const std::string& note : report.notes) std::cerr << "note: " << note << "\n";
  std::string payload =
      opts.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
  if (opts.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opts.output);
    out << payload;
  }
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domcyc: dominating-cycle and forbidden-pair verification on small graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOpts opts;
  std::string lemmas = "all";
  int multipartite_max = 12;
  std::string report_path;
  int enum_n = 0;
  std::string enum_filter = "all";

  CLI::App* verify = app.add_subcommand("verify", "theorem campaign: 2-connected pair-free "
                                                  "graphs must have the required cycle");
  verify->add_option("--pair", opts.pair_names, "two catalog names, e.g. P5,K4-");
  verify->add_option("--family", opts.family_file, "family file (names or g6: lines)");
  verify->add_option("--mode", opts.mode, "longest: dominating longest cycle; any: dominating cycle")
      ->check(CLI::IsMember({"longest", "any"}));
  add_source_flags(verify, opts);
  add_common_flags(verify, opts);

  CLI::App* remark = app.add_subcommand(
      "remark", "multipartite checks: built partition shapes plus paw-free source graphs");
  remark->add_option("--multipartite-max", multipartite_max,
                     "build all partition shapes up to this total (default 12)");
  add_source_flags(remark, opts);
  add_common_flags(remark, opts);

  CLI::App* classify = app.add_subcommand("classify", "position a pair against the seven "
                                                      "maximal pairs");
  classify->add_option("--pair", opts.pair_names, "two catalog names")->required();
  add_common_flags(classify, opts);

  CLI::App* audit = app.add_subcommand("audit", "run lemma predicates as falsification oracles");
  audit->add_option("--lemmas", lemmas,
                    "all or a comma list of consecutive,extension,maximality,nondominating");
  add_source_flags(audit, opts);
  add_common_flags(audit, opts);

  CLI::App* search = app.add_subcommand(
      "search-open", "counterexample search: 2-connected {K1_3*,K3}-free graphs");
  add_source_flags(search, opts);
  add_common_flags(search, opts);

  CLI::App* replay = app.add_subcommand("replay", "re-run a report's counterexamples");
  replay->add_option("--report", report_path, "JSON report to replay")->required();
  add_common_flags(replay, opts);

  CLI::App* enumerate = app.add_subcommand("enumerate", "emit one graph6 line per class");
  enumerate->add_option("--n", enum_n, "order, 3..10")->required();
  enumerate->add_option("--filter", enum_filter, "all|connected|two_connected")
      ->check(CLI::IsMember({"all", "connected", "two_connected"}));
  enumerate->add_option("--jobs", opts.jobs, "worker count");
  enumerate->add_option("--output", opts.output, "write graph6 lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ForbiddenCatalog catalog = load_catalog(opts);
    if (verify->parsed() || search->parsed()) {
      CampaignSpec spec;
      spec.kind = verify->parsed() ? CampaignKind::verify : CampaignKind::search_open;
      spec.mode = opts.mode == "any" ? DomMode::any : DomMode::longest;
      if (search->parsed()) spec.mode = DomMode::any;
      spec.family = resolve_family(opts, catalog);
      spec.source = make_source(opts);
      spec.seed = opts.seed;
      return emit_report(run_campaign(spec, catalog, opts.jobs), opts);
    }
    if (remark->parsed()) {
      CampaignSpec spec;
      spec.kind = CampaignKind::remark;
      spec.multipartite_max = multipartite_max;
      spec.source = make_source(opts);
      spec.seed = opts.seed;
      return emit_report(run_campaign(spec, catalog, opts.jobs), opts);
    }
    if (audit->parsed()) {
      CampaignSpec spec;
      spec.kind = CampaignKind::audit;
      spec.source = make_source(opts);
      spec.seed = opts.seed;
      if (lemmas != "all") {
        std::string rest = lemmas;
        while (!rest.empty()) {
          size_t comma = rest.find(',');
          spec.lemmas.push_back(rest.substr(0, comma));
          rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        }
      }
      return emit_report(run_campaign(spec, catalog, opts.jobs), opts);
    }
    if (classify->parsed()) {
      auto family = resolve_family(opts, catalog);
      if (family.size() != 2) throw std::invalid_argument("classify needs --pair NAME,NAME");
      std::array<std::string, 2> names = {family[0].first, family[1].first};
      PairVerdict verdict = classify_pair(family[0].second, family[1].second, catalog);
      std::cout << explain_pair_verdict(names, family[0].second, family[1].second, verdict,
                                        catalog);
      if (!opts.output.empty()) {
        std::ofstream out(opts.output, std::ios::binary);
        out << pair_verdict_to_json(names, verdict).dump(2) << "\n";
      }
      return 0;
    }
    if (replay->parsed()) {
      std::ifstream in(report_path);
      if (!in) throw std::runtime_error("cannot open report " + report_path);
      nlohmann::json original = nlohmann::json::parse(in);
      VerificationReport rep = run_replay(original, catalog, opts.jobs);
      size_t expected = original.at("counterexamples").size();
      std::cerr << "replayed " << expected << " counterexamples, reproduced "
                << rep.counterexamples.size() << "\n";
      emit_report(rep, opts);
      return rep.counterexamples.size() == expected ? 0 : 1;
    }
    if (enumerate->parsed()) {
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!opts.output.empty()) {
        file.open(opts.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + opts.output);
        out = &file;
      }
      EnumFilter filter = enum_filter == "connected"        ? EnumFilter::connected
                          : enum_filter == "two_connected" ? EnumFilter::two_connected
                                                            : EnumFilter::all;
      int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();
      enumerate_graphs_parallel(enum_n, filter, jobs, [&](const Graph& g) {
        *out << graph6_encode(g) << "\n";
        return true;
      });
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
