#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hullwalk/errors.hpp"
#include "hullwalk/estimators.hpp"
#include "hullwalk/stable.hpp"

namespace hullwalk::cli {

enum class ExperimentKind {
  MeanIntrinsic,
  DriftScaling,
  TimespaceVolume,
  Variance,
  VysotskyCrosscheck,
  DistributionProbe,
  LimitTable,
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::MeanIntrinsic;
  stable::StableLawSpec spec;
  std::vector<std::int64_t> n_list;
  std::vector<int> m_list;
  std::vector<int> d_list;  // limit-table only
  std::int64_t replications = 0;
  std::int64_t mc_samples = 10000;
  geom::McControls mc;
  geom::VmMethod vm_method = geom::VmMethod::Auto;
  std::uint64_t seed = 0;
  std::string output_dir = ".";
  est::ProbeFunctional functional;  // distribution-probe only
  std::string raw_text;             // verbatim config echo for the manifest
};

struct ResultRow {
  std::string experiment;
  std::int64_t n = 0;
  int m = 0;
  std::string scaling;
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<double> limit;
  std::optional<double> rel_error;
};

struct ExperimentRecord {
  ExperimentConfig config;
  std::vector<ResultRow> rows;
  double wall_seconds = 0.0;
};

// Line-based "section/key = value" format; '#' starts a comment. Unknown
// keys, missing required keys, and malformed values raise ConfigError naming
// the key.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

ExperimentRecord run(const ExperimentConfig& config);

// Header "experiment,n,m,scaling,estimate,std_error,limit,rel_error,seed";
// 12 significant digits; rows sorted by (n, m); optional fields blank.
void emit_csv(const ExperimentRecord& record, const std::string& path);
void emit_manifest(const ExperimentRecord& record, const std::string& path);

// Scaling dispatch for drift rows: "n" for m = 1, "n^{(m+1)/2}" for
// 2 <= m <= d, "n*b_n^{d-1}" for m = d on the psi_n route.
std::string drift_scaling_label(int m, int d, bool psi_route);
double scaling_value(const std::string& label, std::int64_t n, int d, int m,
                     double alpha);

// Closed-form table printed by `hullwalk limits`.
void print_limit_table(std::ostream& os, int d);

}  // namespace hullwalk::cli
