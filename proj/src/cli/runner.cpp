#include "wavepack/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "wavepack/analysis/mandelstam.hpp"
#include "wavepack/analysis/saturation.hpp"
#include "wavepack/analytic/autocorrelation.hpp"
#include "wavepack/analytic/wavefunction.hpp"
#include "wavepack/numeric/overlap.hpp"
#include "wavepack/numeric/propagator.hpp"
#include "wavepack/numeric/spectral.hpp"

namespace wavepack::cli {

using analysis::AutocorrSeries;
using nlohmann::json;

bool ComparisonReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Method reference_method(const Scenario& scenario) {
  return scenario.has_method(Method::Analytic) ? Method::Analytic : scenario.methods.front();
}

namespace {

Wavefunction initial_state(const Scenario& s) {
  return analytic::eval_wavefunction(s.system, s.params, Space::Position, s.grid, 0.0);
}

AutocorrSeries run_analytic(const Scenario& s, std::span<const double> times) {
  analytic::ClosedFormSampler sampler(s.system, s.params, s.anticorrelation);
  return analysis::assemble_series(std::ref(sampler), times);
}

AutocorrSeries run_split_operator(const Scenario& s, std::span<const double> times) {
  const Wavefunction psi0 = initial_state(s);
  numeric::SplitOperatorPropagator prop(psi0, s.system, s.params.constants(), s.edge_tolerance);
  const double tol = s.edge_tolerance;
  return analysis::assemble_series(
      [&](double t) {
        prop.advance(t - prop.time(), s.max_dt);
        const cplx A = numeric::overlap(prop.state(), psi0, tol);
        std::optional<cplx> A_bar;
        if (s.anticorrelation) A_bar = numeric::overlap(numeric::parity_reflect(prop.state()), psi0, tol);
        return analytic::AutocorrSample::make(t, A, A_bar);
      },
      times);
}

AutocorrSeries run_spectral(const Scenario& s, std::span<const double> times) {
  const auto expansion = numeric::expand_in_oscillator_basis(initial_state(s), s.system.omega(), s.n_max,
                                                             s.params.constants(), s.tail_tolerance);
  return analysis::assemble_series(
      [&](double t) {
        std::optional<cplx> A_bar;
        if (s.anticorrelation) A_bar = numeric::anticorr_from_spectrum(expansion, t);
        return analytic::AutocorrSample::make(t, numeric::autocorr_from_spectrum(expansion, t), A_bar);
      },
      times);
}

MethodResult run_method(const Scenario& s, Method m, std::span<const double> times) {
  const auto start = std::chrono::steady_clock::now();
  MethodResult result{m, {}, 0.0};
  switch (m) {
    case Method::Analytic: result.series = run_analytic(s, times); break;
    case Method::SplitOperator: result.series = run_split_operator(s, times); break;
    case Method::Spectral: result.series = run_spectral(s, times); break;
  }
  result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

class Checker {
 public:
  Checker(const Scenario& s, const ScenarioResult& r, double scale) : s_(s), r_(r), scale_(scale) {}

  void run(const json& check, std::vector<CheckResult>& out) {
    out_ = &out;
    const auto type = check.at("type").get<std::string>();
    if (type == "agreement") agreement(check);
    else if (type == "saturation") saturation(check);
    else if (type == "mandelstam") mandelstam(check);
    else if (type == "modulus") modulus(check);
    else if (type == "revival") revival(check);
    else if (type == "case1_minimum") case1_minimum(check);
    else if (type == "r_inversion") r_inversion(check);
    else if (type == "return_suppression") return_suppression(check);
  }

 private:
  void below(std::string name, double value, double tolerance) {
    tolerance *= scale_;
    out_->push_back({std::move(name), value, tolerance, true, value <= tolerance});
  }
  void above(std::string name, double value, double threshold) {
    out_->push_back({std::move(name), value, threshold, false, value >= threshold});
  }

  const AutocorrSeries& reference() const { return r_.reference().series; }

  void agreement(const json& c) {
    const auto& ref = reference().samples;
    for (const auto& m : r_.methods) {
      if (&m == &r_.reference()) continue;
      double dA = 0.0, dmod = 0.0, dAbar = 0.0;
      for (std::size_t k = 0; k < ref.size(); ++k) {
        const auto& a = m.series.samples[k];
        dA = std::max(dA, std::abs(a.A - ref[k].A));
        dmod = std::max(dmod, std::abs(a.modulus_sq - ref[k].modulus_sq));
        if (s_.anticorrelation) dAbar = std::max(dAbar, std::abs(*a.A_bar - *ref[k].A_bar));
      }
      const std::string prefix = std::string("agreement.") + to_string(m.method) + ".";
      below(prefix + "max_abs_dA", dA, c.at("max_abs_dA").get<double>());
      below(prefix + "max_abs_dmod2", dmod, c.at("max_abs_dmod2").get<double>());
      if (s_.anticorrelation) below(prefix + "max_abs_dAbar", dAbar, c.at("max_abs_dA").get<double>());
    }
  }

  void saturation(const json& c) {
    const auto& last = reference().samples.back();
    const double C = analysis::saturation_asymptote(s_.system, s_.params);
    const double scaled = last.modulus_sq / analysis::saturation_time_factor(s_.system, s_.params, last.t);
    below("saturation.relative_error", std::abs(scaled / C - 1.0), c.at("rel_tolerance").get<double>());
  }

  void mandelstam(const json& c) {
    const auto bound = analysis::mandelstam_check(s_.params, reference());
    above("mandelstam.min_margin", bound.min_margin, -c.at("margin_tolerance").get<double>() * scale_);
    below("mandelstam.t2_relative_difference", bound.t2_relative_difference,
          c.at("coefficient_rel_tolerance").get<double>());
    above("mandelstam.t4_margin", bound.t4_margin, 0.0);
    above("mandelstam.horizon_coverage", reference().samples.back().t / bound.valid_horizon, 1.0);
  }

  void modulus(const json& c) {
    const double t = to_absolute_time(c.at("t").get<double>(), c.at("t_unit").get<std::string>(), s_.system,
                                      s_.params, "t_unit");
    const bool bar = c.at("quantity") == "A_bar";
    analytic::ClosedFormSampler sampler(s_.system, s_.params, bar);
    const auto sample = sampler(t);
    const double value = std::abs(bar ? *sample.A_bar : sample.A);
    const double expected = c.at("expected_abs").get<double>();
    char label[96];
    std::snprintf(label, sizeof label, "modulus.%s(t=%.6g).abs_error", bar ? "A_bar" : "A", t);
    below(label, std::abs(value - expected), c.at("tolerance").get<double>());
  }

  void revival(const json& c) {
    const double period = 2.0 * std::numbers::pi / s_.system.omega();
    analytic::ClosedFormSampler sampler(s_.system, s_.params);
    double worst = 0.0;
    for (std::int64_t k = 1; k <= c.at("periods").get<std::int64_t>(); ++k)
      worst = std::max(worst, std::abs(sampler(static_cast<double>(k) * period).modulus_sq - 1.0));
    below("revival.max_abs_dmod2", worst, c.at("tolerance").get<double>());
  }

  void case1_minimum(const json& c) {
    if (analytic::classify(s_.system, s_.params) != analytic::ClosedFormCase::HarmonicMinimumUncertainty)
      throw UnsupportedCaseError(Unsupported::NoClosedForm, "case1_minimum needs beta = beta0");
    const double period = 2.0 * std::numbers::pi / s_.system.omega();
    analytic::ClosedFormSampler sampler(s_.system, s_.params);
    const std::size_t n = 4000;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k)
      lowest = std::min(lowest, sampler(period * static_cast<double>(k) / static_cast<double>(n)).modulus_sq);
    const double b0 = s_.params.beta();
    const double hbar = s_.params.hbar();
    const double x0 = s_.params.x0(), p0 = s_.params.p0();
    const double expected = std::exp(-2.0 * (x0 * x0 / (b0 * b0) + b0 * b0 * p0 * p0 / (hbar * hbar)));
    below("case1_minimum.abs_error", std::abs(lowest - expected), c.at("tolerance").get<double>());
  }

  void r_inversion(const json& c) {
    // beta -> beta0^2 / beta, i.e. alpha -> (hbar / m omega) / (alpha hbar^2)
    const double beta0_sq = s_.params.hbar() / (s_.params.mass() * s_.system.omega());
    const double alpha_inv = beta0_sq / (s_.params.alpha() * s_.params.hbar() * s_.params.hbar());
    analytic::ClosedFormSampler direct(s_.system, s_.params);
    analytic::ClosedFormSampler inverted(s_.system, s_.params.with_alpha(alpha_inv));
    double worst = 0.0;
    for (const auto& sample : reference().samples)
      worst = std::max(worst, std::abs(direct.autocorrelation(sample.t) - inverted.autocorrelation(sample.t)));
    below("r_inversion.max_abs_dA", worst, c.at("tolerance").get<double>());
  }

  void return_suppression(const json& c) {
    const double t_ret = 2.0 * std::abs(s_.params.p0() / s_.system.force());
    const Wavefunction psi0 = initial_state(s_);
    numeric::SplitOperatorPropagator prop(psi0, s_.system, s_.params.constants(), s_.edge_tolerance);
    prop.advance(t_ret, s_.max_dt);
    const double measured = std::abs(numeric::overlap(prop.state(), psi0, s_.edge_tolerance));
    const double predicted = std::sqrt(analytic::acceleration_autocorr_modulus_sq(s_.params, s_.system.force(), t_ret));
    const double density = numeric::density_overlap(prop.state(), psi0, s_.edge_tolerance);
    below("return_suppression.abs_error", std::abs(measured - predicted), c.at("match_tolerance").get<double>());
    above("return_suppression.density_ratio", density / measured, c.at("min_ratio").get<double>());
  }

  const Scenario& s_;
  const ScenarioResult& r_;
  double scale_;
  std::vector<CheckResult>* out_ = nullptr;
};

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario, double tolerance_scale) {
  if (!(tolerance_scale > 0.0)) throw ConfigurationError("tolerance scale must be > 0");
  const auto times = analysis::uniform_times(scenario.t_max, scenario.n_samples);

  // Methods are independent; each task owns its own sampler and propagator.
  std::vector<Method> order{reference_method(scenario)};
  for (auto m : scenario.methods)
    if (m != order.front()) order.push_back(m);
  std::vector<std::future<MethodResult>> tasks;
  for (auto m : order) tasks.push_back(std::async(std::launch::async, [&, m] { return run_method(scenario, m, times); }));

  ScenarioResult result;
  for (auto& task : tasks) result.methods.push_back(task.get());
  for (const auto& m : result.methods) result.report.runtimes[to_string(m.method)] = m.runtime_seconds;

  Checker checker(scenario, result, tolerance_scale);
  for (const auto& check : scenario.checks) checker.run(check, result.report.checks);
  return result;
}

}  // namespace wavepack::cli
