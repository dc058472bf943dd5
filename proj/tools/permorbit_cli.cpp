// permorbit: command-line front end for the verifiers.
//
// Exit status: 0 when every check passes (or is skipped), 1 when some check
// fails, 2 on usage or input errors.

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <map>

#include "permorbit/bounds.hpp"
#include "permorbit/census.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/gn.hpp"
#include "permorbit/lemmas.hpp"
#include "permorbit/selftest.hpp"

using namespace permorbit;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string format = "text";
  std::string output;
  int threads = 0;
  bool serial = false;
  bool timings = true;
  std::size_t order_cap = kDefaultAutOrderCap;
  std::size_t aut_cap = kDefaultAutCap;

  AutOptions aut_options() const {
    AutOptions o;
    o.order_cap = std::min(order_cap, FiniteGroup::kMaxOrder);
    o.aut_cap = std::min(aut_cap, kHardAutCap);
    o.parallel = !serial;
    return o;
  }
  json to_json(const std::string& subcommand) const {
    const auto o = aut_options();
    return {{"subcommand", subcommand}, {"order_cap", o.order_cap}, {"aut_cap", o.aut_cap},
            {"parallel", o.parallel}, {"threads", threads}};
  }
};

/// Collapses table1's per-row structural checks into the row value line.
VerificationReport fold_rows(const VerificationReport& full) {
  VerificationReport out(full.name());
  std::map<std::string, std::vector<std::string>> failed_facts;
  for (const auto& c : full.checks()) {
    const auto space = c.name.find(' ', 4);
    if (space != std::string::npos && c.status == Status::fail) {
      failed_facts[c.name.substr(0, space)].push_back(c.name.substr(space + 1));
    }
  }
  for (const auto& c : full.checks()) {
    if (c.name.find(' ', 4) != std::string::npos) continue;
    CheckResult row = c;
    if (auto it = failed_facts.find(c.name); it != failed_facts.end()) {
      row.status = Status::fail;
      row.witness = {{"failed", it->second}, {"row", c.witness}};
    }
    out.add(std::move(row));
  }
  out.set_seconds(full.seconds());
  return out;
}

VerificationReport strip_timings(VerificationReport r) {
  VerificationReport out(r.name());
  for (auto c : r.checks()) {
    c.seconds = 0;
    out.add(std::move(c));
  }
  out.set_seconds(0);
  return out;
}

int emit(const VerificationReport& raw, const RunConfig& config, const std::string& subcommand) {
  const VerificationReport report = config.timings ? raw : strip_timings(raw);
  std::string text;
  if (config.format == "json") {
    json j = report.to_json();
    j["config"] = config.to_json(subcommand);
    text = j.dump(2) + "\n";
  } else {
    text = report.to_text();
  }
  if (config.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output);
    if (!out) throw std::invalid_argument("cannot write " + config.output);
    out << text;
  }
  return report.status() == Status::fail ? 1 : 0;
}

VerificationReport maolperm_report(const PermutationGroup& g, const RunConfig& config) {
  Stopwatch clock;
  VerificationReport report("maol_perm");
  const auto options = config.aut_options();
  if (!g.is_transitive()) throw std::invalid_argument("group is not transitive");
  const auto full = automorphism_group(g, options);
  const auto perm = aut_perm(g, full);
  CheckResult c;
  c.name = "maol_perm";
  c.computed = max_orbit_length(perm, options.parallel);
  c.detail = "degree " + std::to_string(g.degree()) + ", order " + g.order().get_str() + ", |Aut| = " +
             std::to_string(full.size()) + ", |Aut_perm| = " + std::to_string(perm.size());
  if (auto name = census::listed_name(g)) c.detail += ", " + *name;
  report.add(std::move(c));
  report.set_seconds(clock.seconds());
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifiers for transitive groups with short normaliser orbits"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  RunConfig config;
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", config.output, "Write the report to this file");
  app.add_option("--threads", config.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", config.serial, "Use the serial kernels");
  app.add_flag("!--no-timings", config.timings, "Zero all wall times for byte-identical reports");
  app.add_option("--order-cap", config.order_cap, "Largest |G| for automorphism searches (clamped at 5040)")
      ->check(CLI::PositiveNumber);
  app.add_option("--aut-cap", config.aut_cap, "Largest |Aut(G)| held explicitly (clamped at 100000)")
      ->check(CLI::PositiveNumber);

  auto* table1 = app.add_subcommand("table1", "maol_perm of the eleven candidate pairs");
  bool structure = false;
  table1->add_flag("--structure", structure, "List the structural checks of every row separately");

  auto* classify = app.add_subcommand("classify", "Census of transitive groups with maol_perm <= T");
  std::size_t max_degree = census::kDefaultCensusDegree;
  std::uint32_t threshold = 3;
  classify->add_option("--max-degree", max_degree, "Largest degree")->check(CLI::Range(1, 7));
  classify->add_option("--threshold", threshold, "Orbit length bound")->check(CLI::PositiveNumber);
  bool with_solubility = false;
  classify->add_flag("--solubility", with_solubility, "Also check the solubility threshold");

  auto* gn_cmd = app.add_subcommand("gn", "The G_n family");
  unsigned n = 1;
  gn_cmd->add_option("--n", n, "n")->check(CLI::Range(1, 3));

  auto* bounds_cmd = app.add_subcommand("bounds", "Order bounds: spot values and the group corpus");
  bool corpus = false;
  std::size_t corpus_degree = 6;
  bounds_cmd->add_flag("--corpus", corpus, "Check every corpus group");
  bounds_cmd->add_option("--corpus-degree", corpus_degree, "Census groups up to this degree")->check(CLI::Range(1, 7));

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Automorphism and abelian-group property suites");
  lemmas::LemmaOptions lemma_options;
  lemmas_cmd->add_option("--exhaustive-limit", lemma_options.exhaustive_limit,
                         "Sample groups whose socle has more subspaces than this");
  lemmas_cmd->add_option("--sample-size", lemma_options.sample_size, "Subgroups per sampled group");
  lemmas_cmd->add_option("--seed", lemma_options.seed, "Sampling seed");

  auto* maolperm_cmd = app.add_subcommand("maolperm", "maol_perm of one transitive group");
  std::string group_text, group_json;
  auto* group_opt = maolperm_cmd->add_option("--group", group_text, "\"degree=<n>; gens=(1,2,..),...\"");
  auto* json_opt = maolperm_cmd->add_option("--group-json", group_json, "GroupSpec JSON, inline or @file");
  group_opt->excludes(json_opt);
  std::uint32_t expected_value = 0;
  auto* expect_opt = maolperm_cmd->add_option("--expect", expected_value, "Fail unless maol_perm equals this");

  auto* selftest_cmd = app.add_subcommand("selftest", "Worked examples with published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (config.threads > 0) omp_set_num_threads(config.threads);
  lemma_options.parallel = !config.serial;
  const census::CensusOptions census_options{!config.serial};

  try {
    if (table1->parsed()) {
      auto full = census::verify_table1(config.aut_options());
      return emit(structure ? full : fold_rows(full), config, "table1");
    }
    if (classify->parsed()) {
      auto report = census::verify_orbit_length_classification(max_degree, threshold, census_options);
      if (with_solubility) {
        Stopwatch clock;
        report.merge(census::verify_solubility_threshold(max_degree, census_options));
        report.set_seconds(report.seconds() + clock.seconds());
      }
      return emit(report, config, "classify");
    }
    if (gn_cmd->parsed()) return emit(gn::verify_family_member(n, config.aut_options()), config, "gn");
    if (bounds_cmd->parsed()) {
      Stopwatch clock;
      VerificationReport report("order bounds");
      report.merge(bounds::check_spot_values(), "spot: ");
      if (corpus) report.merge(bounds::check_corpus(bounds::standard_corpus(corpus_degree), config.aut_options()));
      report.set_seconds(clock.seconds());
      return emit(report, config, "bounds");
    }
    if (lemmas_cmd->parsed()) return emit(lemmas::run_all(lemma_options), config, "lemmas");
    if (maolperm_cmd->parsed()) {
      PermutationGroup g;
      if (!group_text.empty()) {
        g = parse_group_spec(group_text);
      } else if (!group_json.empty()) {
        std::string text = group_json;
        if (text.front() == '@') {
          std::ifstream in(text.substr(1));
          if (!in) throw std::invalid_argument("cannot read " + text.substr(1));
          text.assign(std::istreambuf_iterator<char>(in), {});
        }
        g = GroupSpec::from_json(json::parse(text)).build();
      } else {
        std::cerr << "maolperm: one of --group, --group-json is required\n" << maolperm_cmd->help();
        return 2;
      }
      auto report = maolperm_report(g, config);
      if (expect_opt->count() > 0) {
        CheckResult c = report.checks().front();
        VerificationReport checked(report.name());
        checked.expect_equal(c.name, expected_value, c.computed, c.detail);
        checked.set_seconds(report.seconds());
        report = checked;
      }
      return emit(report, config, "maolperm");
    }
    if (selftest_cmd->parsed()) return emit(selftest::run(config.aut_options()), config, "selftest");
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --order-cap or --aut-cap up to the hard limits)\n";
    return 2;
  }
  return 2;
}
