#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hullwalk/experiment.hpp"
#include "hullwalk/parallel.hpp"

using namespace hullwalk;
namespace fs = std::filesystem;

namespace {

std::string small_mean_config(const char* structure_block) {
  std::string text =
      "experiment/kind = mean-intrinsic\n"
      "experiment/seed = 4242\n"
      "experiment/n_list = 16,32\n"
      "experiment/m_list = 1,2\n"
      "experiment/replications = 64\n"
      "spec/dim = 2\n";
  text += structure_block;
  return text;
}

constexpr const char* kGaussBlock =
    "spec/alpha = 2\n"
    "spec/structure = gaussian\n";

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const char* tag) {
  const fs::path dir = fs::temp_directory_path() /
                       (std::string("hullwalk_test_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE_BEGIN("experiment");

TEST_CASE("defaults are applied for mc controls") {
  const auto cfg = cli::parse_config_text(small_mean_config(kGaussBlock));
  CHECK(cfg.mc.sphere_directions == 4096);
  CHECK(cfg.mc.rotations == 1024);
  CHECK(cfg.mc_samples == 10000);
  CHECK(cfg.seed == 4242);
  CHECK(cfg.spec.sigma == std::vector<double>{1, 0, 0, 1});
}

TEST_CASE("config errors name the offending key") {
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text(small_mean_config("spec/alpha = 2.5\n"
                                               "spec/structure = gaussian\n")),
      "alpha must be in (0, 2]", ConfigError);
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text(small_mean_config("spec/alpha = 0.9\n"
                                               "spec/structure = rot-inv\n"
                                               "spec/mu = 1,0\n")),
      "drift not supported for alpha <= 1", ConfigError);
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text(small_mean_config(kGaussBlock) +
                             "spec/bogus = 1\n"),
      "unknown key 'spec/bogus'", ConfigError);
  CHECK_THROWS_WITH_AS(
      cli::parse_config_text("experiment/kind = mean-intrinsic\n"),
      "missing required key 'experiment/seed'", ConfigError);
  CHECK_THROWS_AS(
      cli::parse_config_text(small_mean_config("spec/alpha = abc\n"
                                               "spec/structure = gaussian\n")),
      ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text(small_mean_config(kGaussBlock) +
                                         "experiment/kind = limit-table\n"),
                  ConfigError);  // duplicate key
  // n_list must be increasing.
  std::string bad = small_mean_config(kGaussBlock);
  bad.replace(bad.find("16,32"), 5, "32,16");
  CHECK_THROWS_AS(cli::parse_config_text(bad), ConfigError);
}

TEST_CASE("mean-intrinsic run emits scaled rows with limits") {
  auto cfg = cli::parse_config_text(small_mean_config(kGaussBlock));
  const auto record = cli::run(cfg);
  REQUIRE(record.rows.size() == 4);
  for (const auto& row : record.rows) {
    CHECK(row.scaling == "b_n^m");
    CHECK(row.limit.has_value());
    CHECK(row.rel_error.has_value());
    CHECK(row.estimate > 0.0);
  }
  // Rows are sorted by (n, m).
  CHECK(record.rows[0].n == 16);
  CHECK(record.rows[0].m == 1);
  CHECK(record.rows[3].n == 32);
  CHECK(record.rows[3].m == 2);
}

TEST_CASE("rel_error is blank when no closed form exists") {
  const std::string text = small_mean_config(
      "spec/alpha = 1.5\n"
      "spec/structure = discrete\n"
      "spec/atoms = 1:1,0; 1:-1,0; 1:0,1; 1:0,-1\n");
  const auto record = cli::run(cli::parse_config_text(text));
  for (const auto& row : record.rows) {
    CHECK_FALSE(row.limit.has_value());
    CHECK_FALSE(row.rel_error.has_value());
  }
}

TEST_CASE("limit table contains the labeled closed forms") {
  const auto cfg = cli::parse_config_text(
      "experiment/kind = limit-table\n"
      "experiment/seed = 1\n"
      "experiment/d_list = 2,3,4\n");
  const auto record = cli::run(cfg);
  const auto dir = fresh_dir("limits");
  cli::emit_csv(record, (dir / "results.csv").string());
  const std::string csv = slurp(dir / "results.csv");
  CHECK(csv.find("experiment,n,m,scaling,estimate,std_error,limit,rel_error,"
                 "seed") == 0);
  CHECK(csv.find("limit-table,2,1,bm-vm,2.50662827463") != std::string::npos);
  CHECK(csv.find("limit-table,2,2,bm-vm,1.57079632679") != std::string::npos);
  CHECK(csv.find("limit-table,2,2,timespace-vd,0.83554275821") !=
        std::string::npos);
  CHECK(csv.find("limit-table,3,3,timespace-vd,0.523598775598") !=
        std::string::npos);
}

TEST_CASE("csv bytes are identical across worker counts") {
  auto cfg = cli::parse_config_text(small_mean_config(kGaussBlock));
  const auto dir = fresh_dir("workers");
  par::set_workers(1);
  cli::emit_csv(cli::run(cfg), (dir / "a.csv").string());
  par::set_workers(2);
  cli::emit_csv(cli::run(cfg), (dir / "b.csv").string());
  par::set_serial(true);
  cli::emit_csv(cli::run(cfg), (dir / "c.csv").string());
  par::set_serial(false);
  const auto a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a == slurp(dir / "c.csv"));
  CHECK(std::count(a.begin(), a.end(), '\n') == 5);  // header + 4 rows
}

TEST_CASE("manifest re-run reproduces the csv byte for byte") {
  auto cfg = cli::parse_config_text(small_mean_config(kGaussBlock));
  const auto dir = fresh_dir("manifest");
  const auto record = cli::run(cfg);
  cli::emit_csv(record, (dir / "results.csv").string());
  cli::emit_manifest(record, (dir / "manifest.txt").string());
  const auto cfg2 = cli::parse_config((dir / "manifest.txt").string());
  cli::emit_csv(cli::run(cfg2), (dir / "rerun.csv").string());
  CHECK(slurp(dir / "results.csv") == slurp(dir / "rerun.csv"));
}

TEST_CASE("scaling dispatch table") {
  CHECK(cli::drift_scaling_label(1, 3, false) == "n");
  CHECK(cli::drift_scaling_label(2, 3, false) == "n^{(m+1)/2}");
  CHECK(cli::drift_scaling_label(3, 3, false) == "n^{(m+1)/2}");
  CHECK(cli::drift_scaling_label(3, 3, true) == "n*b_n^{d-1}");
  CHECK(cli::drift_scaling_label(1, 1, true) == "n*b_n^{d-1}");
  CHECK(cli::scaling_value("n", 100, 2, 1, 2.0) == doctest::Approx(100.0));
  CHECK(cli::scaling_value("n^{(m+1)/2}", 100, 2, 2, 2.0) ==
        doctest::Approx(1000.0));
  CHECK(cli::scaling_value("n*b_n^{d-1}", 100, 2, 2, 2.0) ==
        doctest::Approx(1000.0));
  CHECK(cli::scaling_value("b_n^m", 64, 2, 2, 1.5) ==
        doctest::Approx(std::pow(64.0, 2.0 / 1.5)));
  // For alpha = 2 the psi-route scaling coincides with n^{(d+1)/2}.
  CHECK(cli::scaling_value("n*b_n^{d-1}", 81, 3, 3, 2.0) ==
        doctest::Approx(cli::scaling_value("n^{(m+1)/2}", 81, 3, 3, 2.0)));
}

TEST_CASE("drift experiments populate limit columns") {
  const std::string text =
      "experiment/kind = drift-scaling\n"
      "experiment/seed = 99\n"
      "experiment/n_list = 64\n"
      "experiment/m_list = 1,2\n"
      "experiment/replications = 96\n"
      "spec/dim = 2\n"
      "spec/alpha = 2\n"
      "spec/structure = gaussian\n"
      "spec/mu = 3,4\n";
  const auto record = cli::run(cli::parse_config_text(text));
  REQUIRE(record.rows.size() == 3);  // m = 0 steiner row, m = 1, m = 2
  CHECK(record.rows[0].m == 0);
  CHECK(record.rows[0].limit == doctest::Approx(2.5));
  CHECK(record.rows[1].m == 1);
  CHECK(record.rows[1].limit == doctest::Approx(5.0));
  CHECK(record.rows[1].scaling == "n");
  CHECK(record.rows[2].m == 2);
  CHECK(record.rows[2].scaling == "n^{(m+1)/2}");
  CHECK(record.rows[2].limit ==
        doctest::Approx(5.0 * 0.8355427582103335));  // ||mu|| sqrt(det I) ST(2)
}

TEST_CASE("budget errors surface from the runner") {
  const std::string text =
      "experiment/kind = vysotsky-crosscheck\n"
      "experiment/seed = 5\n"
      "experiment/n_list = 4000\n"
      "experiment/m_list = 2\n"
      "experiment/replications = 8\n"
      "mc/samples = 10\n"
      "spec/dim = 2\n"
      "spec/alpha = 2\n"
      "spec/structure = gaussian\n";
  CHECK_THROWS_AS(cli::run(cli::parse_config_text(text)), BudgetError);
}

TEST_SUITE_END();
