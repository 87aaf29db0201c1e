// tanaka: exact-arithmetic analysis of graded symbols, universal
// prolongations, pseudo-product structures, and polynomial distribution
// models. See README.md for the document formats.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanaka/catalog.hpp"
#include "tanaka/distribution.hpp"
#include "tanaka/io.hpp"
#include "tanaka/report.hpp"

namespace {

using nlohmann::json;
using namespace tanaka;

struct RunConfig {
  std::string input_path;
  int cap = kDefaultCap;
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string output = "text";
};

std::string read_input(const RunConfig& cfg) {
  if (cfg.input_path.empty() || cfg.input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(cfg.input_path);
  if (!in) throw ParseError("NoSuchFile", "cannot open '" + cfg.input_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& command, const json& result,
          const std::string& text) {
  if (cfg.output == "machine") {
    const json envelope = {{"command", command}, {"ok", true}, {"result", result}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_check_gla(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const GradedLieAlgebra g = io::parse_algebra_doc(doc).build();
  const json rep = report::check_gla_report(g);
  emit(cfg, "check-gla", rep, report::check_gla_text(rep));
  return 0;
}

int run_prolong(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const GradedLieAlgebra g = io::parse_algebra_doc(doc).build();
  ProlongationResult pr = universal_prolongation(g, cfg.cap);
  const json rep = report::prolong_report(pr);
  emit(cfg, "prolong", rep, report::prolong_text(rep));
  return 0;
}

int run_pseudo(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const PseudoProductSymbol s = io::parse_pp_doc(doc).build();
  PPReport rep = analyze_pp(s, cfg.cap);
  const json jrep = report::pp_report(rep);
  emit(cfg, "pseudo", jrep, report::pp_text(jrep));
  return 0;
}

int run_dist_flag(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const io::VFDoc vf = io::parse_vf_doc(doc);
  const DistributionModel m = vf.build();
  const FlagReport fl = weak_derived_flag(m, m.n_vars() + 1);
  const LeviCauchyReport lc = levi_and_cauchy(m);
  const bool regular = regularity_probe(m, cfg.samples, cfg.seed);
  const json rep = report::flag_report(fl, lc, regular, cfg.samples);
  emit(cfg, "dist-flag", rep, report::flag_text(rep));
  return 0;
}

int run_dist_symbol(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const io::VFDoc vf = io::parse_vf_doc(doc);
  const DistributionModel m = vf.build();
  const GradedLieAlgebra symbol = symbol_at_point(m, cfg.samples, cfg.seed);
  json rep;
  rep["symbol"] = io::serialize_algebra(symbol);
  rep["validation"] = report::check_gla_report(symbol);
  std::string text = "symbol algebra at the base point:\n";
  {
    const auto& sp = symbol.space();
    text += "dims:";
    for (int d = sp.min_degree(); d <= sp.max_degree(); ++d)
      text += " " + std::to_string(sp.dim(d));
    text += " (degrees " + std::to_string(sp.min_degree()) + ".." +
            std::to_string(sp.max_degree()) + ")\n";
    text += rep["symbol"].dump(2) + "\n";
  }
  emit(cfg, "dist-symbol", rep, text);
  return 0;
}

int run_dist_pp(const RunConfig& cfg) {
  const json doc = io::parse_json(read_input(cfg));
  const io::FibrationDoc fd = io::parse_fibration_doc(doc);
  auto [symbol, diag] =
      pp_from_fibrations(fd.n_vars, fd.e_fields, fd.f_fields, fd.base_point, cfg.samples, cfg.seed);
  PPReport rep = analyze_pp(symbol, cfg.cap);
  json jrep;
  jrep["symbol"] = io::serialize_pp(symbol.minus(), symbol.e(), symbol.f());
  jrep["diagnostics"] = {{"rank_e", diag.rank_e},
                         {"rank_f", diag.rank_f},
                         {"checked_points", diag.checked_points},
                         {"skipped_samples", diag.skipped_samples},
                         {"note", diag.note}};
  jrep["analysis"] = report::pp_report(rep);
  std::string text = "pseudo-product from the double fibration: rank E = " +
                     std::to_string(diag.rank_e) + ", rank F = " + std::to_string(diag.rank_f) +
                     "\nintegrability checked at " + std::to_string(diag.checked_points) +
                     " points (" + std::to_string(diag.skipped_samples) + " degenerate samples skipped)\n" +
                     report::pp_text(jrep["analysis"]);
  emit(cfg, "dist-pp", jrep, text);
  return 0;
}

int run_fixtures(const RunConfig& cfg, const std::string& name, bool list) {
  if (list) {
    if (cfg.output == "machine") {
      json arr = json::array();
      for (const auto& [n, cmd] : catalog::fixture_index())
        arr.push_back({{"name", n}, {"command", cmd}});
      std::cout << json({{"command", "fixtures"}, {"ok", true}, {"result", arr}}).dump(2) << "\n";
    } else {
      for (const auto& [n, cmd] : catalog::fixture_index())
        std::cout << n << "  (" << cmd << ")\n";
    }
    return 0;
  }
  if (name.empty()) throw ParseError("UnknownFixture", "give a fixture name or --list");
  std::cout << catalog::fixture_document(name).dump(2) << "\n";
  return 0;
}

void report_error(const RunConfig& cfg, const std::string& command, const std::string& kind,
                  const std::string& message) {
  if (cfg.output == "machine") {
    const json envelope = {
        {"command", command}, {"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
    std::cout << envelope.dump(2) << "\n";
  }
  std::cerr << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tanaka prolongation and distribution analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--cap", cfg.cap, "prolongation degree cap")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "seeded sample points for pointwise probes")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "seed for the sample-point generator");
  app.add_option("--output", cfg.output, "report style")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string fixture_name;
  bool list_fixtures = false;

  auto* check = app.add_subcommand("check-gla", "validate a graded Lie algebra document");
  check->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* prolong = app.add_subcommand("prolong", "universal prolongation of a fundamental algebra");
  prolong->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* pseudo = app.add_subcommand("pseudo", "analyze a pseudo-product symbol");
  pseudo->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* dflag = app.add_subcommand("dist-flag", "weak derived flag of a vector-field model");
  dflag->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* dsym = app.add_subcommand("dist-symbol", "symbol algebra of a vector-field model");
  dsym->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* dpp = app.add_subcommand("dist-pp", "pseudo-product from a double fibration");
  dpp->add_option("input", cfg.input_path, "input file (default: stdin)");
  auto* fix = app.add_subcommand("fixtures", "emit a bundled fixture document");
  fix->add_option("name", fixture_name, "fixture name");
  fix->add_flag("--list", list_fixtures, "list the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (check->parsed()) return run_check_gla(cfg);
    if (prolong->parsed()) return run_prolong(cfg);
    if (pseudo->parsed()) return run_pseudo(cfg);
    if (dflag->parsed()) return run_dist_flag(cfg);
    if (dsym->parsed()) return run_dist_symbol(cfg);
    if (dpp->parsed()) return run_dist_pp(cfg);
    if (fix->parsed()) return run_fixtures(cfg, fixture_name, list_fixtures);
  } catch (const ValidationError& e) {
    report_error(cfg, command, e.kind(), e.what());
    return 2;
  } catch (const ParseError& e) {
    report_error(cfg, command, e.kind(), e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    report_error(cfg, command, "BadArgument", e.what());
    return 3;
  }
  return 0;
}
