#include "contavg/experiments/config.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "contavg/errors.hpp"
#include "json.hpp"

namespace contavg::experiments {
namespace {

using nlohmann::json;

// Typed access to one JSON object that rejects keys it was not asked about.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }
  bool has(const std::string& k) {
    seen_.insert(k);
    return j_.contains(k);
  }

  double number(const std::string& k, double def) {
    if (!has(k)) return def;
    const auto& v = j_.at(k);
    if (!v.is_number()) throw ConfigError(key(k), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key(k), "must be finite");
    return d;
  }
  long integer(const std::string& k, long def) {
    if (!has(k)) return def;
    const auto& v = j_.at(k);
    if (!v.is_number_integer()) throw ConfigError(key(k), "expected an integer");
    return v.get<long>();
  }
  bool boolean(const std::string& k, bool def) {
    if (!has(k)) return def;
    const auto& v = j_.at(k);
    if (!v.is_boolean()) throw ConfigError(key(k), "expected true or false");
    return v.get<bool>();
  }
  std::string string(const std::string& k, const std::string& def) {
    if (!has(k)) return def;
    const auto& v = j_.at(k);
    if (!v.is_string()) throw ConfigError(key(k), "expected a string");
    return v.get<std::string>();
  }
  std::vector<double> numbers(const std::string& k, std::vector<double> def) {
    if (!has(k)) return def;
    const auto& v = j_.at(k);
    if (!v.is_array()) throw ConfigError(key(k), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) {
        throw ConfigError(key(k) + "[" + std::to_string(i) + "]", "expected a number");
      }
      out.push_back(v[i].get<double>());
    }
    return out;
  }
  Section child(const std::string& k) {
    seen_.insert(k);
    static const json empty = json::object();
    return Section(j_.contains(k) ? j_.at(k) : empty, key(k));
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(key(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

ExperimentKind parse_kind(const std::string& s) {
  for (auto k : {ExperimentKind::kE1, ExperimentKind::kE2, ExperimentKind::kE3,
                 ExperimentKind::kE4}) {
    if (s == experiment_name(k)) return k;
  }
  throw ConfigError("experiment",
                    "expected one of E1_remainder_decay, E2_smoothing, E3_splitting, "
                    "E4_multifreq_scaling");
}

void check_grid(const std::vector<double>& v, const char* key, double lo, double hi,
                bool lo_open, std::size_t min_size) {
  if (v.size() < min_size) {
    throw ConfigError(key, "needs at least " + std::to_string(min_size) + " values");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool ok = std::isfinite(v[i]) && (lo_open ? v[i] > lo : v[i] >= lo) && v[i] <= hi;
    if (!ok) {
      std::ostringstream os;
      os << "value " << v[i] << " outside " << (lo_open ? "(" : "[") << lo << ", " << hi << "]";
      throw ConfigError(std::string(key) + "[" + std::to_string(i) + "]", os.str());
    }
  }
}

bool writable_location(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::path p = fs::absolute(dir);
  while (!p.empty() && !fs::exists(p)) {
    if (p == p.parent_path()) break;
    p = p.parent_path();
  }
  return fs::is_directory(p) && ::access(p.c_str(), W_OK) == 0;
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kE1: return "E1_remainder_decay";
    case ExperimentKind::kE2: return "E2_smoothing";
    case ExperimentKind::kE3: return "E3_splitting";
    case ExperimentKind::kE4: return "E4_multifreq_scaling";
  }
  return "";
}

std::string ExperimentConfig::output_path() const {
  const std::string name =
      output_name.empty() ? std::string(experiment_name(experiment)) + ".csv" : output_name;
  return (std::filesystem::path(output_dir) / name).string();
}

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  Section root(j, "");
  ExperimentConfig c;
  if (!root.has("schema_version")) throw ConfigError("schema_version", "missing");
  c.schema_version = static_cast<int>(root.integer("schema_version", 0));
  if (!root.has("experiment")) throw ConfigError("experiment", "missing");
  c.experiment = parse_kind(root.string("experiment", ""));
  const long seed = root.integer("seed", 1);
  if (seed < 0) throw ConfigError("seed", "must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.threads = static_cast<int>(root.integer("threads", 0));

  auto out = root.child("output");
  c.output_dir = out.string("dir", c.output_dir);
  c.output_name = out.string("name", "");
  out.finish();

  auto grid = root.child("grid");
  c.eps = grid.numbers("eps", {});
  c.B = grid.numbers("B", {});
  grid.finish();

  auto tr = root.child("truncation");
  c.truncation.K = static_cast<int>(tr.integer("K", c.truncation.K));
  c.truncation.N = static_cast<int>(tr.integer("N", c.truncation.N));
  c.truncation.drop_eps = tr.number("drop_eps", 0.0);
  c.truncation.rho = tr.number("rho", 1.0);
  c.truncation.q = tr.number("q", 0.0);
  tr.finish();

  auto en = root.child("engine");
  c.engine.ds = en.number("ds", 0.0);
  const std::string scheme = en.string("scheme", "rk4");
  if (scheme == "rk4") {
    c.engine.scheme = averaging::StepScheme::kRk4;
  } else if (scheme == "integrating_factor_rk4") {
    c.engine.scheme = averaging::StepScheme::kIntegratingFactorRk4;
  } else {
    throw ConfigError("engine.scheme", "expected rk4 or integrating_factor_rk4");
  }
  c.engine.blowup_factor = en.number("blowup_factor", c.engine.blowup_factor);
  c.engine.record_every = static_cast<int>(en.integer("record_every", 1));
  en.finish();

  auto e1 = root.child("e1");
  c.e1.c_target = e1.number("c_target", c.e1.c_target);
  c.e1.rate_tolerance = e1.number("rate_tolerance", c.e1.rate_tolerance);
  c.e1.ratio_eps = e1.number("ratio_eps", c.e1.ratio_eps);
  c.e1.min_ratio = e1.number("min_ratio", c.e1.min_ratio);
  c.e1.check_k_doubling = e1.boolean("check_k_doubling", c.e1.check_k_doubling);
  c.e1.k_doubling_tolerance = e1.number("k_doubling_tolerance", c.e1.k_doubling_tolerance);
  e1.finish();

  auto e2 = root.child("e2");
  c.e2.s0 = e2.number("s0", c.e2.s0);
  c.e2.power = e2.number("power", c.e2.power);
  c.e2.amplitude = e2.number("amplitude", c.e2.amplitude);
  c.e2.envelope_rate = e2.number("envelope_rate", c.e2.envelope_rate);
  c.e2.envelope_factor = e2.number("envelope_factor", c.e2.envelope_factor);
  e2.finish();

  auto e3 = root.child("e3");
  c.e3.section_phases = e3.numbers("section_phases", c.e3.section_phases);
  c.e3.max_rel_err = e3.number("max_rel_err", c.e3.max_rel_err);
  c.e3.require_monotone = e3.boolean("require_monotone", c.e3.require_monotone);
  c.e3.slope_tolerance = e3.number("slope_tolerance", c.e3.slope_tolerance);
  c.e3.f0 = e3.number("f0", c.e3.f0);
  c.e3.f0_tolerance = e3.number("f0_tolerance", c.e3.f0_tolerance);
  c.e3.max_c1 = e3.number("max_c1", c.e3.max_c1);
  c.e3.linearity_tolerance = e3.number("linearity_tolerance", c.e3.linearity_tolerance);
  c.e3.section_tolerance = e3.number("section_tolerance", c.e3.section_tolerance);
  c.e3.map_tol = e3.number("map_tol", c.e3.map_tol);
  e3.finish();

  auto e4 = root.child("e4");
  c.e4.omega = e4.numbers("omega", c.e4.omega);
  c.e4.alpha = e4.number("alpha", c.e4.alpha);
  c.e4.q = e4.number("q", c.e4.q);
  c.e4.mu = e4.number("mu", c.e4.mu);
  c.e4.gamma = e4.number("gamma", c.e4.gamma);
  c.e4.exponent_lo = e4.number("exponent_lo", c.e4.exponent_lo);
  c.e4.exponent_hi = e4.number("exponent_hi", c.e4.exponent_hi);
  c.e4.min_r2 = e4.number("min_r2", c.e4.min_r2);
  c.e4.steps = static_cast<int>(e4.integer("steps", c.e4.steps));
  e4.finish();

  root.finish();
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("<file>", "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void validate(const ExperimentConfig& c) {
  if (c.schema_version != 1) throw ConfigError("schema_version", "only version 1 is supported");
  if (c.threads < 0) throw ConfigError("threads", "must be >= 0");
  const auto& t = c.truncation;
  if (t.K < 1) throw ConfigError("truncation.K", "must be >= 1");
  if (t.N < 1) throw ConfigError("truncation.N", "must be >= 1");
  if (t.drop_eps < 0) throw ConfigError("truncation.drop_eps", "must be >= 0");
  if (!(t.rho > 0)) throw ConfigError("truncation.rho", "must be > 0");
  if (t.q < 0) throw ConfigError("truncation.q", "must be >= 0");
  if (c.engine.ds < 0) throw ConfigError("engine.ds", "must be >= 0 (0 selects the default)");
  if (!(c.engine.blowup_factor > 1)) throw ConfigError("engine.blowup_factor", "must be > 1");
  if (c.engine.record_every < 1) throw ConfigError("engine.record_every", "must be >= 1");
  if (c.output_dir.empty()) throw ConfigError("output.dir", "must not be empty");
  if (!writable_location(c.output_dir)) throw ConfigError("output.dir", "not writable");

  switch (c.experiment) {
    case ExperimentKind::kE1:
      check_grid(c.eps, "grid.eps", 0.0, 0.5, true, 4);
      check_grid(c.B, "grid.B", 0.0, 0.2, false, 1);
      if (!(c.e1.c_target >= 0 && c.e1.c_target < std::numbers::pi / 2)) {
        throw ConfigError("e1.c_target", "must lie in [0, pi/2)");
      }
      if (!(c.e1.rate_tolerance > 0)) throw ConfigError("e1.rate_tolerance", "must be > 0");
      if (!(c.e1.min_ratio > 0)) throw ConfigError("e1.min_ratio", "must be > 0");
      break;
    case ExperimentKind::kE2:
      if (t.K < 32) throw ConfigError("truncation.K", "the smoothing experiment needs K >= 32");
      if (t.N < 2) throw ConfigError("truncation.N", "the smoothing experiment needs N >= 2");
      if (!(c.e2.s0 >= 0)) throw ConfigError("e2.s0", "must be >= 0");
      if (!(c.e2.amplitude > 0)) throw ConfigError("e2.amplitude", "must be > 0");
      if (!(c.e2.envelope_factor > 0)) throw ConfigError("e2.envelope_factor", "must be > 0");
      break;
    case ExperimentKind::kE3:
      check_grid(c.eps, "grid.eps", 0.15, 0.3, false, 1);
      check_grid(c.B, "grid.B", 0.0, 0.02, false, 1);
      if (c.e3.section_phases.empty()) throw ConfigError("e3.section_phases", "must not be empty");
      if (!(c.e3.map_tol > 0)) throw ConfigError("e3.map_tol", "must be > 0");
      break;
    case ExperimentKind::kE4:
      check_grid(c.eps, "grid.eps", 0.0, 0.5, true, 4);
      if (c.e4.omega.size() != 2) throw ConfigError("e4.omega", "expected two frequencies");
      if (!(c.e4.alpha > 0)) throw ConfigError("e4.alpha", "must be > 0");
      if (!(c.e4.q > 0)) throw ConfigError("e4.q", "must be > 0");
      if (!(c.e4.gamma > 0)) throw ConfigError("e4.gamma", "must be > 0");
      if (c.e4.steps < 1) throw ConfigError("e4.steps", "must be >= 1");
      break;
  }
}

int effective_threads(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv("CONTAVG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace contavg::experiments
