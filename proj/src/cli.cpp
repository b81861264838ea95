#include "lines/cli.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lines/checks.hpp"
#include "lines/report_io.hpp"

namespace lines::cli {

namespace {

ParseResult usage_error(const std::string& message) {
  return ParseResult{std::nullopt, kExitUsage, message};
}

const std::map<std::string, Engine> kEngineNames{
    {"residue", Engine::Residue}, {"schubert", Engine::Schubert}, {"both", Engine::Both}};

bool reports_disagree(const InvariantReport& r, const CliConfig& config) {
  if (config.engine == Engine::Both && r.engines_agree && !*r.engines_agree) return true;
  if (config.mirror_check && r.mirror && r.mirror->difference != r.residue_value) return true;
  return false;
}

int emit(const std::vector<InvariantReport>& reports, bool single, const CliConfig& config, std::ostream& out) {
  const io::ViewOptions view{config.mirror_check};
  if (config.output == Output::Json) {
    out << io::dump(single ? io::to_json(reports.front(), view) : io::to_json(reports, view));
  } else {
    io::write_table(out, reports, view);
  }
  for (const auto& r : reports)
    if (reports_disagree(r, config)) return kExitDisagree;
  return kExitOk;
}

int run_selftest(const CliConfig& config, std::ostream& out) {
  const auto results = checks::run_all();
  bool ok = true;
  if (config.output == Output::Json) {
    io::Json arr = io::Json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      ok = ok && r.passed;
    }
    out << io::dump(arr);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << r.detail << ")\n";
      ok = ok && r.passed;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv) {
  CLI::App app{"Degree-1 Gromov-Witten invariants (line counts) of projective hypersurfaces"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string engine = "residue";
  bool json = false;

  auto* compute = app.add_subcommand("compute", "Evaluate one invariant");
  compute->add_option("--ambient", cfg.ambient, "N, for the ambient space CP^{N-1}")->required();
  compute->add_option("--degree", cfg.degree, "Hypersurface degree k")->required();
  compute->add_option("--insertions", cfg.insertions, "Comma-separated codimensions a_1,...,a_n")
      ->required()
      ->delimiter(',');
  compute->add_option("--engine", engine, "residue | schubert | both")
      ->check(CLI::IsMember({"residue", "schubert", "both"}));
  compute->add_flag("--mirror", cfg.mirror_check, "Report and check the mirror-transformation identity");
  compute->add_flag("--json", json, "Emit JSON instead of a table");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every dimension-matched query over a range");
  sweep_cmd->add_option("--ambient-min", cfg.ambient_min)->required();
  sweep_cmd->add_option("--ambient-max", cfg.ambient_max)->required();
  auto* cy = sweep_cmd->add_flag("--calabi-yau", cfg.calabi_yau, "Use k = N");
  auto* deg = sweep_cmd->add_option("--degree", cfg.sweep_degree, "Fixed hypersurface degree k");
  cy->excludes(deg);
  deg->excludes(cy);
  sweep_cmd->add_option("--points", cfg.points, "Number of insertions n")->required();
  sweep_cmd->add_option("--engine", engine, "residue | schubert | both")
      ->check(CLI::IsMember({"residue", "schubert", "both"}));
  sweep_cmd->add_flag("--mirror", cfg.mirror_check, "Report and check the mirror-transformation identity");
  sweep_cmd->add_flag("--json", json, "Emit JSON instead of a table");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");
  selftest->add_flag("--json", json, "Emit JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return ParseResult{std::nullopt, kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return ParseResult{std::nullopt, kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    return usage_error(msg);
  }

  cfg.engine = kEngineNames.at(engine);
  cfg.output = json ? Output::Json : Output::Table;

  if (compute->parsed()) {
    cfg.command = Command::Compute;
    if (auto err = validation_error(InvariantQuery{cfg.ambient, cfg.degree, cfg.insertions})) return usage_error(*err);
  } else if (sweep_cmd->parsed()) {
    cfg.command = Command::Sweep;
    if (!cfg.calabi_yau && !cfg.sweep_degree) return usage_error("sweep requires --calabi-yau or --degree");
    if (cfg.sweep_degree && *cfg.sweep_degree < 1) return usage_error("--degree must be >= 1");
    if (cfg.points < 1) return usage_error("--points must be >= 1");
  } else {
    cfg.command = Command::Selftest;
  }
  return ParseResult{cfg, kExitOk, {}};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err, const Engines& engines) {
  const bool schubert = config.engine != Engine::Residue;
  try {
    switch (config.command) {
      case Command::Compute: {
        const InvariantQuery q{config.ambient, config.degree, config.insertions};
        return emit({compute(q, schubert, engines)}, true, config, out);
      }
      case Command::Sweep: {
        const DegreeRule degrees =
            config.calabi_yau ? rules::calabi_yau() : rules::fixed_degree(config.sweep_degree.value_or(1));
        const auto entries = sweep(config.ambient_min, config.ambient_max, degrees,
                                   rules::dimension_valid(config.points), SweepOptions{schubert, 0}, engines);
        std::vector<InvariantReport> reports;
        for (const auto& e : entries) {
          if (const auto* r = std::get_if<InvariantReport>(&e)) {
            reports.push_back(*r);
          } else {
            const auto& bad = std::get<SweepError>(e);
            err << "error: " << to_string(bad.query) << ": " << bad.message << '\n';
          }
        }
        return emit(reports, false, config, out);
      }
      case Command::Selftest:
        return run_selftest(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitFailure;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message << (parsed.exit_code == kExitOk ? "" : "\n");
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err, Engines::standard());
}

}  // namespace lines::cli
