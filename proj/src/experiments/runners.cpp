#include "contavg/experiments/runners.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "contavg/averaging/engine.hpp"
#include "contavg/errors.hpp"
#include "contavg/splitting/lobe.hpp"
#include "contavg/splitting/normal_form.hpp"
#include "json.hpp"

namespace contavg::experiments {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) { return format_number(v); }

std::string short_fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void add_check(ExperimentOutcome& out, std::string name, bool ok, std::string detail) {
  out.checks.push_back({std::move(name), ok, std::move(detail)});
}

// ---------------------------------------------------------------- E1

struct E1Cell {
  double eps = 0.0;
  double s_target = 0.0;
  double remainder = kNaN;
  double initial = kNaN;
  std::string status = "ok";
};

std::vector<E1Cell> e1_cells(const ExperimentConfig& cfg, const ft::TruncationPolicy& policy) {
  const double B = cfg.B.front();
  std::vector<E1Cell> cells(cfg.eps.size());
  parallel_for(static_cast<int>(cells.size()), effective_threads(cfg), [&](int i) {
    E1Cell& c = cells[i];
    c.eps = cfg.eps[i];
    const splitting::PendulumParams p{c.eps, B};
    c.s_target = averaging::stopping_parameter(cfg.e1.c_target, c.eps);
    c.initial = splitting::normal_form_reduce(p, 0.0, policy, cfg.engine).remainder_bound;
    try {
      c.remainder = splitting::normal_form_reduce(p, cfg.e1.c_target, policy, cfg.engine)
                        .remainder_bound;
      if (!std::isfinite(c.remainder) || c.remainder <= 0 ||
          c.remainder == std::numeric_limits<double>::max()) {
        c.status = "non_finite";
      }
    } catch (const averaging::BlowUpError& e) {
      c.status = "blowup_at_s=" + short_fmt(e.s_reached());
    }
  });
  return cells;
}

std::optional<FitResult> e1_fit(const std::vector<E1Cell>& cells) {
  std::vector<double> x, y;
  for (const auto& c : cells) {
    if (c.status != "ok") continue;
    x.push_back(1.0 / c.eps);
    y.push_back(c.remainder);
  }
  if (x.size() < 4) return std::nullopt;
  return fit_log_linear(x, y);
}

// ---------------------------------------------------------------- E2

ft::VectorFieldFT e2_initial_field(const ExperimentConfig& cfg) {
  const auto& t = cfg.truncation;
  const ft::SeriesShape shape{1, 1, t.K, t.N};
  std::mt19937_64 rng(cfg.seed);
  ft::VectorFieldFT u(shape);
  auto& c = u[0];
  c.set_coeff(0, {2}, cfg.e2.amplitude);
  const int degree = std::min(2, t.N);
  for (int k = 1; k <= t.K; ++k) {
    const double envelope = cfg.e2.amplitude * std::pow(k, -cfg.e2.power);
    for (int a = 0; a <= degree; ++a) {
      const double mag = uniform(rng, 0.8, 1.0);
      const double phase = uniform(rng, 0.0, 2 * kPi);
      c.set_coeff(k, {a}, 0.5 * envelope * std::polar(mag, phase));
    }
  }
  return u;
}

std::vector<double> norms_by_k(const ft::VectorFieldFT& u, double rho) {
  const auto& f = u[0].fourier();
  std::vector<double> out(f.cutoff() + 1, 0.0);
  for (int i = 0; i < f.stored_size(); ++i) out[f.mode(i)[0]] = u.mode_norm(i, rho);
  return out;
}

// ---------------------------------------------------------------- E3

struct E3Cell {
  double eps = 0.0;
  double B = 0.0;
  double phase = 0.0;
  splitting::LobeRecord rec;
  std::string status = "ok";
};

// ---------------------------------------------------------------- E4

ft::VectorFieldFT e4_initial_field(const ExperimentConfig& cfg, double eps) {
  const auto& t = cfg.truncation;
  const ft::SeriesShape shape{2, 1, t.K, t.N};
  ft::VectorFieldFT u(shape, ft::PhaseKind::kTorus);
  auto& y = u[2];
  for (int i = 0; i < y.stored_modes(); ++i) {
    const int l1 = y.fourier().l1(i);
    if (l1 == 0) continue;
    // mu e^{-q|k|} cos<k, x> split over k and -k.
    y.mode(i)[0] = 0.5 * eps * cfg.e4.mu * std::exp(-cfg.e4.q * l1);
  }
  return u;
}

// min over the box of |<k, omega>| |k|_1^gamma.
double diophantine_constant(const ExperimentConfig& cfg) {
  const auto f = ft::FourierIndex::get(2, cfg.truncation.K);
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < f->stored_size(); ++i) {
    const auto k = f->mode(i);
    const int l1 = f->l1(i);
    if (l1 == 0) continue;
    const double kw = std::abs(k[0] * cfg.e4.omega[0] + k[1] * cfg.e4.omega[1]);
    g = std::min(g, kw * std::pow(l1, cfg.e4.gamma));
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------- pool

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int workers = std::clamp(threads, 1, n);
  std::vector<std::exception_ptr> errors(n);
  auto body = [&](std::atomic<int>& next) {
    for (int i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::atomic<int> next{0};
  if (workers == 1) {
    body(next);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back([&] { body(next); });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---------------------------------------------------------------- outcome

bool ExperimentOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ExperimentOutcome::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const FitResult* ExperimentOutcome::fit(const std::string& name) const {
  for (const auto& [n, f] : fits) {
    if (n == name) return &f;
  }
  return nullptr;
}

double ExperimentOutcome::value(const std::string& name) const {
  for (const auto& [n, v] : values) {
    if (n == name) return v;
  }
  return kNaN;
}

std::string ExperimentOutcome::summary_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(kind);
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["fits"] = nlohmann::ordered_json::object();
  for (const auto& [n, f] : fits) {
    j["fits"][n] = {{"a", f.a}, {"b", f.b}, {"se_a", f.se_a},
                    {"se_b", f.se_b}, {"r2", f.r2}, {"n", f.n}};
  }
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [n, v] : values) j["values"][n] = v;
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string ExperimentOutcome::summary_text() const {
  std::ostringstream os;
  os << experiment_name(kind) << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name << ": " << c.detail << "\n";
  }
  for (const auto& [n, f] : fits) {
    os << "  fit " << n << ": a=" << short_fmt(f.a) << " (se " << short_fmt(f.se_a)
       << ") b=" << short_fmt(f.b) << " (se " << short_fmt(f.se_b)
       << ") R2=" << short_fmt(f.r2) << " n=" << f.n << "\n";
  }
  for (const auto& [n, v] : values) os << "  " << n << " = " << short_fmt(v) << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

// ---------------------------------------------------------------- runners

ExperimentOutcome run_e1(const ExperimentConfig& cfg) {
  ExperimentOutcome out;
  out.kind = ExperimentKind::kE1;
  const auto& s = cfg.e1;
  const auto cells = e1_cells(cfg, cfg.truncation);

  out.table.columns = {"eps", "B", "c_target", "s_target", "remainder",
                       "remainder_initial", "ratio", "status"};
  for (const auto& c : cells) {
    out.table.add_row({fmt(c.eps), fmt(cfg.B.front()), fmt(s.c_target), fmt(c.s_target),
                       fmt(c.remainder), fmt(c.initial), fmt(c.remainder / c.initial), c.status});
  }

  const auto fit = e1_fit(cells);
  if (!fit) {
    add_check(out, "fit", false, "fewer than 4 cells finished without blow-up");
    return out;
  }
  out.fits.emplace_back("log_remainder_vs_inv_eps", *fit);
  const double alpha = -fit->b;
  out.values.emplace_back("alpha", alpha);
  {
    const double err = s.c_target > 0 ? std::abs(alpha - s.c_target) / s.c_target
                                      : std::abs(alpha);
    add_check(out, "decay_rate", err <= s.rate_tolerance,
              "alpha=" + short_fmt(alpha) + " c_target=" + short_fmt(s.c_target) +
                  " rel_err=" + short_fmt(err) + " tol=" + short_fmt(s.rate_tolerance));
  }

  if (s.c_target > 0) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const E1Cell& c) {
      return std::abs(c.eps - s.ratio_eps) <= 1e-12 * s.ratio_eps;
    });
    if (it == cells.end() || it->status != "ok") {
      add_check(out, "remainder_ratio", false,
                "no finished cell at eps=" + short_fmt(s.ratio_eps));
    } else {
      const double gain = it->initial / it->remainder;
      out.values.emplace_back("ratio_initial_over_final", gain);
      add_check(out, "remainder_ratio", gain >= s.min_ratio,
                "remainder(0)/remainder(c/eps)=" + short_fmt(gain) + " at eps=" +
                    short_fmt(it->eps) + " required>=" + short_fmt(s.min_ratio));
    }
  }

  if (s.check_k_doubling && s.c_target > 0) {
    auto doubled = cfg.truncation;
    doubled.K *= 2;
    const auto fit2 = e1_fit(e1_cells(cfg, doubled));
    if (!fit2) {
      add_check(out, "k_doubling", false, "doubled-K run lost cells to blow-up");
    } else {
      out.fits.emplace_back("log_remainder_vs_inv_eps_2K", *fit2);
      const double alpha2 = -fit2->b;
      const double change = std::abs(alpha2 - alpha) / std::abs(alpha);
      out.values.emplace_back("alpha_2K", alpha2);
      add_check(out, "k_doubling", change <= s.k_doubling_tolerance,
                "alpha(2K)=" + short_fmt(alpha2) + " change=" + short_fmt(change) +
                    " tol=" + short_fmt(s.k_doubling_tolerance));
    }
  }
  return out;
}

ExperimentOutcome run_e2(const ExperimentConfig& cfg) {
  ExperimentOutcome out;
  out.kind = ExperimentKind::kE2;
  const auto& s = cfg.e2;
  const double rho = cfg.truncation.rho;

  averaging::AveragingState st;
  st.eps = s.amplitude;
  st.field = e2_initial_field(cfg);
  st.variant = averaging::FlowVariant::kNonautonomous;
  st.policy = cfg.truncation;
  const auto init = norms_by_k(std::get<ft::VectorFieldFT>(st.field), rho);
  auto run = averaging::run_to(st, s.s0, cfg.engine);
  const auto fin = norms_by_k(std::get<ft::VectorFieldFT>(run.state.field), rho);

  const double scale = init[1] > 0 ? init[1] : 1.0;
  const double c_env = s.envelope_factor * (fin[1] / scale) * std::exp(s.envelope_rate);
  out.values.emplace_back("envelope_constant", c_env);
  out.values.emplace_back("k1_ratio", fin[1] / scale);

  out.table.columns = {"k", "initial_norm", "final_norm", "normalized", "envelope", "status"};
  int worst_k = -1;
  double worst = 0.0;
  for (int k = 1; k < static_cast<int>(fin.size()); ++k) {
    const double n = fin[k] / scale;
    const double env = c_env * std::pow(k, -s.power) * std::exp(-s.envelope_rate * k);
    const bool ok = n <= env;
    if (!ok && worst_k < 0) worst_k = k;
    if (env > 0) worst = std::max(worst, n / env);
    out.table.add_row({std::to_string(k), fmt(init[k]), fmt(fin[k]), fmt(n), fmt(env),
                       ok ? "ok" : "above_envelope"});
  }
  out.values.emplace_back("max_norm_over_envelope", worst);
  add_check(out, "envelope", worst_k < 0,
            worst_k < 0 ? "all " + std::to_string(fin.size() - 1) +
                              " modes under the envelope, max ratio " + short_fmt(worst)
                        : "first offending k=" + std::to_string(worst_k));
  return out;
}

ExperimentOutcome run_e3(const ExperimentConfig& cfg) {
  ExperimentOutcome out;
  out.kind = ExperimentKind::kE3;
  const auto& s = cfg.e3;

  std::vector<E3Cell> cells;
  for (double eps : cfg.eps) {
    for (double B : cfg.B) {
      for (double ph : s.section_phases) cells.push_back({eps, B, ph, {}, "ok"});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const E3Cell& a, const E3Cell& b) {
    return std::tie(a.B, a.phase, a.eps) < std::tie(b.B, b.phase, b.eps);
  });
  splitting::LobeOptions opts;
  opts.map.tol = s.map_tol;
  parallel_for(static_cast<int>(cells.size()), effective_threads(cfg), [&](int i) {
    auto& c = cells[i];
    try {
      c.rec = splitting::measure_lobe({c.eps, c.B}, c.phase, opts);
      if (c.rec.below_floor) c.status = "below_floor";
    } catch (const Error& e) {
      c.status = "error";
      c.rec.note = e.what();
    }
  });

  out.table.columns = {"eps", "B", "section_phase", "area_measured", "area_melnikov",
                       "area_paper", "rel_err_melnikov", "ratio_to_paper", "status"};
  for (const auto& c : cells) {
    const bool ok = c.status == "ok";
    out.table.add_row({fmt(c.eps), fmt(c.B), fmt(c.phase),
                       fmt(ok ? c.rec.area_measured : kNaN), fmt(c.rec.area_melnikov),
                       fmt(c.rec.area_paper), fmt(ok ? c.rec.rel_err_melnikov() : kNaN),
                       fmt(ok ? c.rec.ratio_to_paper() : kNaN), c.status});
    if (c.status == "error") {
      out.notes.push_back("cell eps=" + short_fmt(c.eps) + " B=" + short_fmt(c.B) +
                          " failed: " + c.rec.note);
    }
  }

  const double phase0 = s.section_phases.front();
  auto primary = [&](double B) {
    std::vector<const E3Cell*> v;
    for (const auto& c : cells) {
      if (c.B == B && c.phase == phase0 && c.status == "ok") v.push_back(&c);
    }
    return v;  // sorted by eps
  };
  std::vector<double> Bs;
  for (double B : cfg.B) {
    if (B > 0 && std::find(Bs.begin(), Bs.end(), B) == Bs.end()) Bs.push_back(B);
  }
  std::sort(Bs.begin(), Bs.end());

  for (const auto& c : cells) {
    if (c.B > 0 && c.status != "ok") {
      add_check(out, "cell eps=" + short_fmt(c.eps) + " B=" + short_fmt(c.B), false,
                "no measurable lobe (" + c.status + ")");
    }
  }

  double max_abs_rel = 0.0;
  double c1 = 0.0;
  for (const auto& c : cells) {
    if (c.status != "ok") continue;
    const double r = std::abs(c.rec.rel_err_melnikov());
    max_abs_rel = std::max(max_abs_rel, r);
    if (c.B <= 0.01) c1 = std::max(c1, r / c.eps);
  }
  add_check(out, "rel_err_bound", max_abs_rel <= s.max_rel_err,
            "max |rel_err|=" + short_fmt(max_abs_rel) + " bound=" + short_fmt(s.max_rel_err));
  out.values.emplace_back("max_abs_rel_err", max_abs_rel);
  out.values.emplace_back("C1", c1);
  add_check(out, "C1", c1 <= s.max_c1,
            "C1=max|rel_err|/eps=" + short_fmt(c1) + " bound=" + short_fmt(s.max_c1));

  for (double B : Bs) {
    const auto v = primary(B);
    const std::string tag = "B=" + short_fmt(B);
    if (s.require_monotone && v.size() >= 2) {
      // |rel_err| must decrease as eps increases.
      bool mono = true;
      bool signed_mono = true;
      std::string trace;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = v[i]->rec.rel_err_melnikov();
        trace += (i ? " " : "") + short_fmt(r);
        if (i == 0) continue;
        const double prev = v[i - 1]->rec.rel_err_melnikov();
        mono = mono && std::abs(r) < std::abs(prev);
        signed_mono = signed_mono && r < prev;
      }
      add_check(out, "rel_err_decreasing_in_eps " + tag, mono,
                "rel_err by increasing eps: " + trace);
      out.notes.push_back(tag + ": signed rel_err is " +
                          (signed_mono ? std::string("strictly") : std::string("not")) +
                          " decreasing in eps");
    }
    if (v.size() < 4) {
      out.notes.push_back(tag + ": fewer than 4 measured cells, no exponent fit");
      continue;
    }
    std::vector<double> x, y;
    for (const auto* c : v) {
      x.push_back(1.0 / c->eps);
      y.push_back(c->rec.area_measured * c->eps / (8 * kPi * B));
    }
    const auto f = fit_log_linear(x, y);
    out.fits.emplace_back("log_prefactor_vs_inv_eps " + tag, f);
    const double slope_err = std::abs(f.b + kPi / 2) / (kPi / 2);
    add_check(out, "exponent_slope " + tag, slope_err <= s.slope_tolerance,
              "slope=" + short_fmt(f.b) + " target=-pi/2 rel_err=" + short_fmt(slope_err));
    const double f0 = std::exp(f.a);
    const double f0_err = std::abs(f0 - s.f0) / s.f0;
    out.values.emplace_back("f0 " + tag, f0);
    add_check(out, "prefactor_f0 " + tag, f0_err <= s.f0_tolerance,
              "exp(intercept)=" + short_fmt(f0) + " target=" + short_fmt(s.f0) +
                  " rel_err=" + short_fmt(f0_err));
  }

  if (Bs.size() >= 2) {
    double spread = 0.0;
    for (double eps : cfg.eps) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      int n = 0;
      for (const auto& c : cells) {
        if (c.eps != eps || c.phase != phase0 || c.B <= 0 || c.status != "ok") continue;
        const double per_b = c.rec.area_measured / c.B;
        lo = std::min(lo, per_b);
        hi = std::max(hi, per_b);
        ++n;
      }
      if (n >= 2) spread = std::max(spread, (hi - lo) / lo);
    }
    add_check(out, "linear_in_B", spread <= s.linearity_tolerance,
              "max relative spread of area/B=" + short_fmt(spread));
  }

  if (s.section_phases.size() >= 2) {
    double diff = 0.0;
    for (const auto& c : cells) {
      if (c.phase != phase0 || c.B <= 0 || c.status != "ok") continue;
      for (const auto& d : cells) {
        if (d.eps != c.eps || d.B != c.B || d.phase == phase0 || d.status != "ok") continue;
        diff = std::max(diff, std::abs(d.rec.area_measured - c.rec.area_measured) /
                                  c.rec.area_measured);
      }
    }
    add_check(out, "section_independence", diff <= s.section_tolerance,
              "max relative difference between sections=" + short_fmt(diff));
  }
  return out;
}

ExperimentOutcome run_e4(const ExperimentConfig& cfg) {
  ExperimentOutcome out;
  out.kind = ExperimentKind::kE4;
  const auto& s = cfg.e4;
  out.notes.push_back(
      "multi-frequency xi = i sign<k, omega> is a generalization of the single-frequency "
      "operator, not a formula taken from the source");

  struct Cell {
    double eps = 0.0, s_target = 0.0, remainder = kNaN, initial = kNaN;
    std::string status = "ok";
  };
  std::vector<Cell> cells(cfg.eps.size());
  parallel_for(static_cast<int>(cells.size()), effective_threads(cfg), [&](int i) {
    auto& c = cells[i];
    c.eps = cfg.eps[i];
    averaging::AveragingState st;
    st.eps = c.eps;
    st.field = e4_initial_field(cfg, c.eps);
    st.variant = averaging::FlowVariant::kNonautonomous;
    st.policy = cfg.truncation;
    st.omega = s.omega;
    c.initial = averaging::remainder_norm(st, cfg.truncation) / c.eps;
    c.s_target = averaging::stopping_parameter(s.alpha, c.eps);
    auto engine = cfg.engine;
    engine.ds = c.s_target / s.steps;
    try {
      const auto run = averaging::run_to(st, c.s_target, engine);
      c.remainder = averaging::remainder_norm(run.state, cfg.truncation) / c.eps;
      if (!(c.remainder > 0) || !std::isfinite(c.remainder)) c.status = "non_finite";
    } catch (const averaging::BlowUpError& e) {
      c.status = "blowup_at_s=" + short_fmt(e.s_reached());
    }
  });

  out.table.columns = {"eps", "s_target", "remainder", "remainder_initial", "status"};
  std::vector<double> x1, y1, x2, y2;
  for (const auto& c : cells) {
    out.table.add_row(
        {fmt(c.eps), fmt(c.s_target), fmt(c.remainder), fmt(c.initial), c.status});
    if (c.status != "ok") continue;
    x1.push_back(1.0 / std::sqrt(c.eps));
    y1.push_back(c.remainder);
    if (c.remainder < c.initial) {
      x2.push_back(std::log(1.0 / c.eps));
      y2.push_back(std::log(std::log(c.initial / c.remainder)));
    }
  }

  const double gamma0 = diophantine_constant(cfg);
  const double qbar_formula = (1.0 + 1.0 / s.gamma) *
                              std::pow(s.gamma * gamma0 * s.alpha * std::pow(s.q, s.gamma),
                                       1.0 / (s.gamma + 1.0));
  out.values.emplace_back("gamma0", gamma0);
  out.values.emplace_back("qbar_formula", qbar_formula);

  if (x1.size() < 4 || x2.size() < 4) {
    add_check(out, "fit", false, "fewer than 4 usable cells");
    return out;
  }
  const auto f1 = fit_log_linear(x1, y1);
  const auto f2 = fit_linear(x2, y2);
  out.fits.emplace_back("log_remainder_vs_inv_sqrt_eps", f1);
  out.fits.emplace_back("loglog_decay_vs_log_inv_eps", f2);
  out.values.emplace_back("qbar_fitted", -f1.b);
  out.values.emplace_back("exponent", f2.b);
  add_check(out, "linearity_inv_sqrt_eps", f1.r2 >= s.min_r2,
            "R2=" + short_fmt(f1.r2) + " required>=" + short_fmt(s.min_r2));
  add_check(out, "exponent", f2.b >= s.exponent_lo && f2.b <= s.exponent_hi && f2.r2 >= s.min_r2,
            "exponent=" + short_fmt(f2.b) + " in [" + short_fmt(s.exponent_lo) + ", " +
                short_fmt(s.exponent_hi) + "], R2=" + short_fmt(f2.r2));
  return out;
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  switch (cfg.experiment) {
    case ExperimentKind::kE1: return run_e1(cfg);
    case ExperimentKind::kE2: return run_e2(cfg);
    case ExperimentKind::kE3: return run_e3(cfg);
    case ExperimentKind::kE4: return run_e4(cfg);
  }
  throw ContractViolation("unknown experiment");
}

ExperimentOutcome run_and_write(const ExperimentConfig& cfg) {
  auto out = run_experiment(cfg);
  const std::string path = cfg.output_path();
  write_text(path, to_csv(out.table));
  write_text(path + ".summary.json", out.summary_json());
  return out;
}

}  // namespace contavg::experiments
