#include "hullwalk/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hullwalk/limits.hpp"
#include "hullwalk/linalg.hpp"
#include "hullwalk/walk.hpp"

namespace hullwalk::cli {

namespace {

const std::set<std::string> kKnownKeys = {
    "experiment/kind",      "experiment/seed",        "experiment/n_list",
    "experiment/m_list",    "experiment/d_list",      "experiment/replications",
    "experiment/output",    "mc/sphere_directions",   "mc/rotations",
    "mc/samples",           "mc/vm_method",           "spec/dim",
    "spec/alpha",           "spec/structure",         "spec/sigma",
    "spec/gamma",           "spec/atoms",             "spec/symmetric",
    "spec/mu",              "probe/functional",       "probe/m",
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

class KeyMap {
 public:
  explicit KeyMap(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("malformed line (expected 'section/key = value'): " +
                          line);
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (!kKnownKeys.count(key)) throw ConfigError("unknown key '" + key + "'");
      if (map_.count(key)) throw ConfigError("duplicate key '" + key + "'");
      map_[key] = value;
    }
  }

  bool has(const std::string& key) const { return map_.count(key) > 0; }

  std::string require(const std::string& key) const {
    auto it = map_.find(key);
    if (it == map_.end())
      throw ConfigError("missing required key '" + key + "'");
    return it->second;
  }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = map_.find(key);
    return it == map_.end() ? fallback : it->second;
  }

 private:
  std::map<std::string, std::string> map_;
};

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("malformed number for key '" + key + "': " + value);
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  if (v != std::floor(v)) throw ConfigError("key '" + key + "' must be an integer");
  return static_cast<std::int64_t>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("key '" + key + "' must be true or false");
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& value) {
  std::vector<T> out;
  for (const auto& tok : split(value, ','))
    out.push_back(static_cast<T>(parse_int(key, tok)));
  return out;
}

std::vector<double> parse_vector(const std::string& key,
                                 const std::string& value) {
  std::vector<double> out;
  for (const auto& tok : split(value, ',')) out.push_back(parse_number(key, tok));
  return out;
}

ExperimentKind parse_kind(const std::string& value) {
  if (value == "mean-intrinsic") return ExperimentKind::MeanIntrinsic;
  if (value == "drift-scaling") return ExperimentKind::DriftScaling;
  if (value == "timespace-volume") return ExperimentKind::TimespaceVolume;
  if (value == "variance") return ExperimentKind::Variance;
  if (value == "vysotsky-crosscheck") return ExperimentKind::VysotskyCrosscheck;
  if (value == "distribution-probe") return ExperimentKind::DistributionProbe;
  if (value == "limit-table") return ExperimentKind::LimitTable;
  throw ConfigError("unknown experiment kind '" + value + "'");
}

stable::StableLawSpec parse_spec(const KeyMap& keys) {
  stable::StableLawSpec spec;
  spec.dim = static_cast<int>(parse_int("spec/dim", keys.require("spec/dim")));
  spec.alpha = parse_number("spec/alpha", keys.require("spec/alpha"));
  const std::string structure = keys.require("spec/structure");
  if (structure == "gaussian") {
    spec.structure = stable::Structure::Gaussian;
    const std::string sigma = keys.get("spec/sigma", "identity");
    spec.sigma.assign(static_cast<std::size_t>(spec.dim) * spec.dim, 0.0);
    if (sigma.rfind("identity", 0) == 0) {
      double scale = 1.0;
      if (sigma.size() > 8) {
        if (sigma[8] != '*')
          throw ConfigError("malformed value for key 'spec/sigma'");
        scale = parse_number("spec/sigma", sigma.substr(9));
      }
      for (int i = 0; i < spec.dim; ++i)
        spec.sigma[static_cast<std::size_t>(i) * spec.dim + i] = scale;
    } else {
      const auto rows = split(sigma, ';');
      if (static_cast<int>(rows.size()) != spec.dim)
        throw ConfigError("spec/sigma must have dim rows");
      for (int i = 0; i < spec.dim; ++i) {
        const auto vals = parse_vector("spec/sigma", rows[i]);
        if (static_cast<int>(vals.size()) != spec.dim)
          throw ConfigError("spec/sigma must have dim columns");
        for (int j = 0; j < spec.dim; ++j)
          spec.sigma[static_cast<std::size_t>(i) * spec.dim + j] = vals[j];
      }
    }
  } else if (structure == "rot-inv") {
    spec.structure = stable::Structure::RotInv;
    spec.gamma = parse_number("spec/gamma", keys.get("spec/gamma", "1"));
  } else if (structure == "discrete") {
    spec.structure = stable::Structure::DiscreteSpectral;
    spec.symmetric =
        parse_bool("spec/symmetric", keys.get("spec/symmetric", "true"));
    for (const auto& atom : split(keys.require("spec/atoms"), ';')) {
      const auto colon = atom.find(':');
      if (colon == std::string::npos)
        throw ConfigError("spec/atoms entries must look like 'weight:x,y'");
      stable::SpectralAtom a;
      a.weight = parse_number("spec/atoms", trim(atom.substr(0, colon)));
      a.direction = parse_vector("spec/atoms", trim(atom.substr(colon + 1)));
      spec.atoms.push_back(std::move(a));
    }
  } else {
    throw ConfigError("unknown spec/structure '" + structure + "'");
  }
  if (keys.has("spec/mu")) spec.mu = parse_vector("spec/mu", keys.require("spec/mu"));
  try {
    stable::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

double det_sigma_perp(const stable::StableLawSpec& spec) {
  const int d = spec.dim;
  const walk::DriftFrame frame = walk::drift_frame(spec.drift());
  std::vector<double> perp(static_cast<std::size_t>(d - 1) * (d - 1), 0.0);
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) {
      double v = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          v += frame.basis[static_cast<std::size_t>(i) * d + a] *
               spec.sigma[static_cast<std::size_t>(a) * d + b] *
               frame.basis[static_cast<std::size_t>(j) * d + b];
      perp[static_cast<std::size_t>(i - 1) * (d - 1) + (j - 1)] = v;
    }
  if (d == 1) return 1.0;
  return lin::determinant(perp.data(), d - 1);
}

// Closed-form limit of E[V_m(n)]/b_n^m for the zero-drift spec, when known.
std::optional<double> mean_limit_constant(const stable::StableLawSpec& spec,
                                          int m) {
  if (spec.has_drift()) return std::nullopt;
  if (spec.structure == stable::Structure::RotInv)
    return lim::rotinv_expected_vm(spec.alpha, spec.gamma, spec.dim, m);
  if (spec.structure == stable::Structure::Gaussian) {
    const int d = spec.dim;
    const double c = spec.sigma[0];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double want = i == j ? c : 0.0;
        if (std::fabs(spec.sigma[static_cast<std::size_t>(i) * d + j] - want) >
            1e-12 * std::max(1.0, std::fabs(c)))
          return std::nullopt;
      }
    return std::pow(c, m / 2.0) * lim::bm_expected_vm(d, m);
  }
  return std::nullopt;
}

void push_scaled(std::vector<ResultRow>& rows, const std::string& experiment,
                 std::int64_t n, int m, const std::string& label,
                 double divisor, const est::McEstimate& raw,
                 std::optional<double> limit) {
  ResultRow row;
  row.experiment = experiment;
  row.n = n;
  row.m = m;
  row.scaling = label;
  row.estimate = raw.mean / divisor;
  row.std_error = raw.std_error / divisor;
  row.limit = limit;
  if (limit && *limit != 0.0)
    row.rel_error = std::fabs(row.estimate - *limit) / std::fabs(*limit);
  rows.push_back(std::move(row));
}

}  // namespace

std::string drift_scaling_label(int m, int d, bool psi_route) {
  if (psi_route && m == d) return "n*b_n^{d-1}";
  if (m == 1) return "n";
  return "n^{(m+1)/2}";
}

double scaling_value(const std::string& label, std::int64_t n, int d, int m,
                     double alpha) {
  const double nn = static_cast<double>(n);
  const double bn = std::pow(nn, 1.0 / alpha);
  if (label == "1") return 1.0;
  if (label == "n") return nn;
  if (label == "b_n") return bn;
  if (label == "b_n^m") return std::pow(bn, m);
  if (label == "n^{(m+1)/2}") return std::pow(nn, (m + 1) / 2.0);
  if (label == "n*b_n^{d-1}") return nn * std::pow(bn, d - 1);
  if (label == "n^m") return std::pow(nn, m);
  if (label == "n^{m+1}") return std::pow(nn, m + 1);
  throw std::invalid_argument("unknown scaling label '" + label + "'");
}

ExperimentConfig parse_config_text(const std::string& text) {
  const KeyMap keys(text);
  ExperimentConfig cfg;
  cfg.raw_text = text;
  cfg.kind = parse_kind(keys.require("experiment/kind"));
  cfg.seed = static_cast<std::uint64_t>(
      parse_int("experiment/seed", keys.require("experiment/seed")));
  cfg.output_dir = keys.get("experiment/output", ".");
  cfg.mc.sphere_directions = parse_int(
      "mc/sphere_directions", keys.get("mc/sphere_directions", "4096"));
  cfg.mc.rotations = parse_int("mc/rotations", keys.get("mc/rotations", "1024"));
  cfg.mc_samples = parse_int("mc/samples", keys.get("mc/samples", "10000"));
  const std::string method = keys.get("mc/vm_method", "auto");
  if (method == "auto") cfg.vm_method = geom::VmMethod::Auto;
  else if (method == "exact") cfg.vm_method = geom::VmMethod::Exact;
  else if (method == "sphere") cfg.vm_method = geom::VmMethod::Sphere;
  else if (method == "kubota") cfg.vm_method = geom::VmMethod::Kubota;
  else throw ConfigError("unknown mc/vm_method '" + method + "'");
  if (cfg.mc.sphere_directions < 1)
    throw ConfigError("mc/sphere_directions must be >= 1");
  if (cfg.mc.rotations < 1) throw ConfigError("mc/rotations must be >= 1");

  if (cfg.kind == ExperimentKind::LimitTable) {
    cfg.d_list = parse_list<int>("experiment/d_list",
                                 keys.require("experiment/d_list"));
    for (int d : cfg.d_list)
      if (d < 1) throw ConfigError("experiment/d_list entries must be >= 1");
    if (keys.has("spec/structure")) cfg.spec = parse_spec(keys);
    return cfg;
  }

  cfg.spec = parse_spec(keys);
  cfg.n_list = parse_list<std::int64_t>("experiment/n_list",
                                        keys.require("experiment/n_list"));
  if (cfg.n_list.empty()) throw ConfigError("experiment/n_list must be nonempty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < 1)
      throw ConfigError("experiment/n_list entries must be >= 1");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1])
      throw ConfigError("experiment/n_list must be increasing");
  }

  if (cfg.kind == ExperimentKind::DistributionProbe) {
    const std::string f = keys.require("probe/functional");
    if (f == "steiner-norm") {
      cfg.functional = est::ProbeFunctional::steiner_norm();
    } else if (f == "vm") {
      cfg.functional = est::ProbeFunctional::vm(
          static_cast<int>(parse_int("probe/m", keys.require("probe/m"))));
    } else {
      throw ConfigError("probe/functional must be 'vm' or 'steiner-norm'");
    }
  } else {
    cfg.m_list = parse_list<int>("experiment/m_list",
                                 keys.require("experiment/m_list"));
    if (cfg.m_list.empty()) throw ConfigError("experiment/m_list must be nonempty");
    for (int m : cfg.m_list)
      if (m < 1 || m > cfg.spec.dim)
        throw ConfigError("experiment/m_list entries must be in [1, dim]");
  }

  cfg.replications = parse_int("experiment/replications",
                               keys.require("experiment/replications"));
  if (cfg.replications < 2)
    throw ConfigError("experiment/replications must be >= 2");
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str());
}

ExperimentRecord run(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentRecord record;
  record.config = cfg;
  std::vector<ResultRow>& rows = record.rows;
  const StreamKey root{cfg.seed, 0};

  switch (cfg.kind) {
    case ExperimentKind::LimitTable: {
      for (int d : cfg.d_list) {
        for (int m = 1; m <= d; ++m) {
          ResultRow row;
          row.experiment = "limit-table";
          row.n = d;
          row.m = m;
          row.scaling = "bm-vm";
          row.estimate = lim::bm_expected_vm(d, m);
          row.limit = row.estimate;
          row.rel_error = 0.0;
          rows.push_back(row);
        }
        if (d >= 2) {
          ResultRow row;
          row.experiment = "limit-table";
          row.n = d;
          row.m = d;
          row.scaling = "timespace-vd";
          row.estimate = lim::timespace_volume_constant(d);
          row.limit = row.estimate;
          row.rel_error = 0.0;
          rows.push_back(row);
        }
        if (cfg.spec.structure == stable::Structure::RotInv) {
          for (int m = 1; m <= d; ++m) {
            ResultRow row;
            row.experiment = "limit-table";
            row.n = d;
            row.m = m;
            row.scaling = "rotinv-vm";
            row.estimate =
                lim::rotinv_expected_vm(cfg.spec.alpha, cfg.spec.gamma, d, m);
            row.limit = row.estimate;
            row.rel_error = 0.0;
            rows.push_back(row);
          }
        }
      }
      break;
    }
    case ExperimentKind::MeanIntrinsic: {
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        const auto ests = est::empirical_mean_vm_multi(
            cfg.spec, n, cfg.m_list, cfg.replications, root.derived(i),
            cfg.vm_method, cfg.mc);
        for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
          const int m = cfg.m_list[mi];
          push_scaled(rows, "mean-intrinsic", n, m, "b_n^m",
                      scaling_value("b_n^m", n, cfg.spec.dim, m, cfg.spec.alpha),
                      ests[mi], mean_limit_constant(cfg.spec, m));
        }
      }
      break;
    }
    case ExperimentKind::DriftScaling: {
      if (!cfg.spec.has_drift())
        throw ConfigError("drift-scaling requires nonzero spec/mu");
      const lim::DriftLimits dl = lim::drift_limits(
          cfg.spec.drift(),
          cfg.spec.structure == stable::Structure::Gaussian
              ? std::optional<double>(det_sigma_perp(cfg.spec))
              : std::nullopt,
          cfg.spec.dim);
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        const auto ests = est::empirical_mean_vm_multi(
            cfg.spec, n, cfg.m_list, cfg.replications, root.derived(i),
            cfg.vm_method, cfg.mc);
        for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
          const int m = cfg.m_list[mi];
          const std::string label =
              drift_scaling_label(m, cfg.spec.dim, /*psi_route=*/false);
          std::optional<double> limit;
          if (m == 1) limit = dl.v1;
          else if (m == cfg.spec.dim && dl.vd) limit = dl.vd;
          push_scaled(rows, "drift-scaling", n, m, label,
                      scaling_value(label, n, cfg.spec.dim, m, cfg.spec.alpha),
                      ests[mi], limit);
        }
        const auto sp = est::empirical_steiner_point(
            cfg.spec, n, cfg.replications, root.derived(i).derived(0x53),
            cfg.mc.sphere_directions);
        ResultRow row;
        row.experiment = "drift-scaling";
        row.n = n;
        row.m = 0;
        row.scaling = "n";
        double norm2 = 0.0, se2 = 0.0;
        for (int j = 0; j < cfg.spec.dim; ++j) {
          norm2 += sp.mean[j] * sp.mean[j];
          se2 += sp.std_error[j] * sp.std_error[j];
        }
        row.estimate = std::sqrt(norm2) / static_cast<double>(n);
        row.std_error = std::sqrt(se2) / static_cast<double>(n);
        row.limit = dl.v1 / 2.0;
        row.rel_error = std::fabs(row.estimate - *row.limit) / *row.limit;
        rows.push_back(row);
      }
      break;
    }
    case ExperimentKind::TimespaceVolume: {
      if (!cfg.spec.has_drift() ||
          cfg.spec.structure != stable::Structure::Gaussian)
        throw ConfigError("timespace-volume requires a Gaussian spec with drift");
      const int d = cfg.spec.dim;
      const lim::DriftLimits dl =
          lim::drift_limits(cfg.spec.drift(), det_sigma_perp(cfg.spec), d);
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        const auto ests = est::empirical_mean_vm_multi(
            cfg.spec, n, {d}, cfg.replications, root.derived(i), cfg.vm_method,
            cfg.mc);
        const std::string label = drift_scaling_label(d, d, false);
        push_scaled(rows, "timespace-volume", n, d, label,
                    scaling_value(label, n, d, d, cfg.spec.alpha), ests[0],
                    dl.vd);
      }
      break;
    }
    case ExperimentKind::Variance: {
      const bool drift = cfg.spec.has_drift();
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
          const int m = cfg.m_list[mi];
          const auto est = est::empirical_variance_vm(
              cfg.spec, n, m, cfg.replications,
              root.derived(i).derived(mi), cfg.vm_method, cfg.mc);
          const std::string label = drift ? "n^{m+1}" : "n^m";
          push_scaled(rows, "variance", n, m, label,
                      scaling_value(label, n, cfg.spec.dim, m, cfg.spec.alpha),
                      est, std::nullopt);
        }
      }
      break;
    }
    case ExperimentKind::VysotskyCrosscheck: {
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        for (std::size_t mi = 0; mi < cfg.m_list.size(); ++mi) {
          const int m = cfg.m_list[mi];
          const auto vys = est::vysotsky_mean_vm(cfg.spec, n, m, cfg.mc_samples,
                                                 root.derived(i).derived(2 * mi));
          const auto dir = est::empirical_mean_vm(
              cfg.spec, n, m, cfg.replications,
              root.derived(i).derived(2 * mi + 1), cfg.vm_method, cfg.mc);
          push_scaled(rows, "vysotsky-crosscheck", n, m, "vysotsky-sum", 1.0,
                      vys, std::nullopt);
          push_scaled(rows, "vysotsky-crosscheck", n, m, "direct-hull", 1.0,
                      dir, std::nullopt);
        }
      }
      break;
    }
    case ExperimentKind::DistributionProbe: {
      const bool psi = cfg.spec.has_drift();
      for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
        const std::int64_t n = cfg.n_list[i];
        const auto base = est::hull_distribution_probe(
            cfg.spec, n, cfg.replications, cfg.functional,
            root.derived(i).derived(1), psi, cfg.mc);
        const auto fine = est::hull_distribution_probe(
            cfg.spec, 4 * n, cfg.replications, cfg.functional,
            root.derived(i).derived(2), psi, cfg.mc);
        ResultRow row;
        row.experiment = "distribution-probe";
        row.n = n;
        row.m = cfg.functional.kind == est::ProbeFunctional::Kind::Vm
                    ? cfg.functional.m
                    : 0;
        row.scaling = "ks";
        row.estimate = est::two_sample_ks(base, fine);
        row.std_error = 0.0;
        row.limit =
            est::ks_critical_value(0.01, cfg.replications, cfg.replications);
        row.rel_error = row.estimate / *row.limit;
        rows.push_back(row);
      }
      break;
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     if (a.n != b.n) return a.n < b.n;
                     return a.m < b.m;
                   });
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return record;
}

namespace {
std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

void emit_csv(const ExperimentRecord& record, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("unwritable path '" + path + "'");
  os << "experiment,n,m,scaling,estimate,std_error,limit,rel_error,seed\n";
  for (const auto& row : record.rows) {
    os << row.experiment << ',' << row.n << ',' << row.m << ',' << row.scaling
       << ',' << fmt12(row.estimate) << ',' << fmt12(row.std_error) << ','
       << (row.limit ? fmt12(*row.limit) : "") << ','
       << (row.rel_error ? fmt12(*row.rel_error) : "") << ','
       << record.config.seed << '\n';
  }
}

void emit_manifest(const ExperimentRecord& record, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("unwritable path '" + path + "'");
  os << "# hullwalk manifest (version 1.0.0)\n";
  os << "# wall_seconds = " << fmt12(record.wall_seconds) << "\n";
  os << "# rows = " << record.rows.size() << "\n";
  os << "# stream roles: per row group i the stream is derived(seed, i); "
        "walk/vm/steiner substreams hang off each replicate\n";
  os << "# config follows verbatim; this file can be re-run directly\n";
  std::istringstream is(record.config.raw_text);
  std::string line;
  while (std::getline(is, line)) os << line << "\n";
}

void print_limit_table(std::ostream& os, int d) {
  os << "closed-form limits for d = " << d << "\n";
  for (int m = 1; m <= d; ++m)
    os << "  E[V_" << m << "] of the Brownian path hull (b_n^" << m
       << " scaling): " << fmt12(lim::bm_expected_vm(d, m)) << "\n";
  if (d >= 2)
    os << "  E[Vol_" << d << "] of the time-space Brownian hull: "
       << fmt12(lim::timespace_volume_constant(d)) << "\n";
  os << "  chi moment E[sqrt(chi^2(" << d
     << "))]: " << fmt12(lim::chi_sqrt_moment(d)) << "\n";
  os << "  Dirichlet simplex integral: " << fmt12(lim::dirichlet_limit(d))
     << "\n";
}

}  // namespace hullwalk::cli
