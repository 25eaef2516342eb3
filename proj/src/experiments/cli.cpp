#include "contavg/experiments/cli.hpp"

#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "contavg/errors.hpp"
#include "contavg/experiments/config.hpp"
#include "contavg/experiments/csv.hpp"
#include "contavg/experiments/runners.hpp"

namespace contavg::experiments {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous averaging experiments", "contavg"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run an experiment and write its CSV and summary");
  run->add_option("--config", config_path, "experiment config (JSON)")->required();

  std::string validate_path;
  auto* val = app.add_subcommand("validate", "check a config without running it");
  val->add_option("--config", validate_path, "experiment config (JSON)")->required();

  std::string input, format = "csv";
  auto* rep = app.add_subcommand("report", "re-emit a result CSV as CSV or markdown");
  rep->add_option("--input", input, "result CSV")->required();
  rep->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*val) {
      const auto cfg = load_config(validate_path);
      out << "config ok: " << experiment_name(cfg.experiment) << " -> " << cfg.output_path()
          << "\n";
      return 0;
    }
    if (*run) {
      const auto cfg = load_config(config_path);
      const auto outcome = run_and_write(cfg);
      out << outcome.summary_text() << "wrote " << cfg.output_path() << "\n";
      return outcome.passed() ? 0 : 1;
    }
    const Table t = parse_csv(read_text(input));
    out << (format == "md" ? to_markdown(t) : to_csv(t));
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace contavg::experiments
