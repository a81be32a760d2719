#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hullwalk/experiment.hpp"
#include "hullwalk/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hullwalk: convex hulls of stable random walks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int workers = 0;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config");
  run_cmd->add_option("config", config_path, "experiment config file")
      ->required();
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--workers", workers, "worker thread count");

  int limits_d = 2;
  auto* limits_cmd =
      app.add_subcommand("limits", "print the closed-form limit table");
  limits_cmd->add_option("--d", limits_d, "dimension")->check(CLI::Range(1, 12));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*limits_cmd) {
      hullwalk::cli::print_limit_table(std::cout, limits_d);
      return 0;
    }
    hullwalk::par::set_workers(workers);
    hullwalk::cli::ExperimentConfig cfg =
        hullwalk::cli::parse_config(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    std::filesystem::create_directories(cfg.output_dir);
    const hullwalk::cli::ExperimentRecord record = hullwalk::cli::run(cfg);
    const auto csv = std::filesystem::path(cfg.output_dir) / "results.csv";
    const auto manifest =
        std::filesystem::path(cfg.output_dir) / "manifest.txt";
    hullwalk::cli::emit_csv(record, csv.string());
    hullwalk::cli::emit_manifest(record, manifest.string());
    std::cout << "wrote " << csv.string() << " (" << record.rows.size()
              << " rows, " << record.wall_seconds << " s)\n";
    return 0;
  } catch (const hullwalk::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const hullwalk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
