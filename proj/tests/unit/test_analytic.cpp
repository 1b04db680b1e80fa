#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wavepack/analytic.hpp"
#include "wavepack/core.hpp"

using namespace wavepack;
using namespace wavepack::analytic;
using std::numbers::pi;

TEST_CASE("initial Gaussian peak") {
  const auto g = Grid::closed(-1.0, 1.0, 3);
  const auto psi = eval_wavefunction(SystemSpec::free_particle(), PacketParams(1.0, 0.0, 0.0), Space::Position, g, 0.0);
  CHECK(std::abs(psi.samples[1] - std::pow(pi, -0.25)) < 1e-15);
}

TEST_CASE("every system starts from the same Gaussian") {
  const PacketParams p(0.8, 0.7, -1.3, {1.1, 0.9});
  const auto g = Grid::closed(-12.0, 12.0, 401);
  for (const auto& sys : {SystemSpec::free_particle(), SystemSpec::uniform_acceleration(0.4),
                          SystemSpec::harmonic(1.7), SystemSpec::inverted(0.6)}) {
    const auto psi = eval_wavefunction(sys, p, Space::Position, g, 0.0);
    for (std::size_t j = 0; j < g.size(); ++j)
      CHECK(std::abs(psi.samples[j] - oracle::psi0(g[j], 0.8, 0.7, -1.3, 1.1)) < 1e-14);
  }
}

TEST_CASE("space tags and transform-route errors") {
  const PacketParams p(1.0, 0.0, 0.0);
  const auto xg = Grid::closed(-10.0, 10.0, 101);
  const auto pg = Grid::closed(-10.0, 10.0, 101, Space::Momentum);
  CHECK_THROWS_AS(eval_wavefunction(SystemSpec::free_particle(), p, Space::Momentum, xg, 0.0), ConfigurationError);
  try {
    eval_wavefunction(SystemSpec::harmonic(1.0), p, Space::Momentum, pg, 1.0);
    FAIL("expected UnsupportedCaseError");
  } catch (const UnsupportedCaseError& e) {
    CHECK(e.kind() == Unsupported::TransformRoute);
  }
}

TEST_CASE("free momentum-space packet matches the direct formula") {
  const PacketParams p(1.2, 0.5, 0.8, {0.9, 1.4});
  const auto g = Grid::closed(-8.0, 8.0, 257, Space::Momentum);
  for (double t : {0.0, 0.7, 5.0, -2.0}) {
    const auto phi = eval_wavefunction(SystemSpec::free_particle(), p, Space::Momentum, g, t);
    for (std::size_t k = 0; k < g.size(); ++k)
      CHECK(std::abs(phi.samples[k] - oracle::phi_free(g[k], t, 1.2, 0.5, 0.8, 0.9, 1.4)) < 1e-13);
  }
}

TEST_CASE("zero force reproduces the free particle pointwise") {
  const PacketParams p(1.0, 0.3, 0.9);
  const auto xg = Grid::closed(-30.0, 30.0, 301);
  const auto pg = Grid::closed(-6.0, 6.0, 301, Space::Momentum);
  for (double t : {0.5, 3.0, 17.0}) {
    for (const auto& [g, space] : {std::pair{xg, Space::Position}, std::pair{pg, Space::Momentum}}) {
      const auto a = eval_wavefunction(SystemSpec::uniform_acceleration(0.0), p, space, g, t);
      const auto b = eval_wavefunction(SystemSpec::free_particle(), p, space, g, t);
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(a.samples[j] - b.samples[j]) < 1e-14);
    }
    CHECK(std::abs(closed_form_autocorr(SystemSpec::uniform_acceleration(0.0), p, t).A -
                   closed_form_autocorr(SystemSpec::free_particle(), p, t).A) < 1e-14);
  }
}

TEST_CASE("accelerated packet in momentum space is the free packet with shifted momentum") {
  // phi(p, t) = phi_0(p - F t) exp(-i/hbar integral of (p - F t + F s)^2 / 2m ds)
  const double F = 0.7, t = 1.9;
  const PacketParams p(0.9, 0.4, -0.6);
  const auto g = Grid::closed(-6.0, 6.0, 121, Space::Momentum);
  const auto phi = eval_wavefunction(SystemSpec::uniform_acceleration(F), p, Space::Momentum, g, t);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double q = g[k] - F * t;
    const double action = (std::pow(q + F * t, 3) - std::pow(q, 3)) / (6.0 * F);
    const cplx expected = oracle::phi_free(q, 0.0, 0.9, 0.4, -0.6) * std::exp(cplx(0.0, -action));
    CHECK(std::abs(phi.samples[k] - expected) < 1e-13);
  }
}

TEST_CASE("free autocorrelation examples") {
  const PacketParams p(1.0, 0.0, 1.0);
  CHECK(closed_form_autocorr(SystemSpec::free_particle(), p, 0.0).A == cplx(1.0, 0.0));
  const auto s = closed_form_autocorr(SystemSpec::free_particle(), p, 2.0);
  CHECK(s.modulus_sq == doctest::Approx(std::exp(-1.0) / std::sqrt(2.0)).epsilon(1e-14));
  // Independent oracle: momentum-space quadrature of phi*(p,t) phi(p,0).
  const cplx A = oracle::midpoint(
      [](double q) { return std::conj(oracle::phi_free(q, 2.0, 1.0, 0.0, 1.0)) * oracle::phi_free(q, 0.0, 1.0, 0.0, 1.0); },
      -12.0, 14.0, 20000);
  CHECK(std::abs(s.A - A) < 1e-10);
  CHECK(std::abs(s.modulus_sq - 0.2601) < 1e-4);
}

TEST_CASE("free autocorrelation for randomized packets against quadrature") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> a(0.4, 2.0), x(-2.0, 2.0), k(-2.0, 2.0), tt(-6.0, 6.0);
  for (int n = 0; n < 10; ++n) {
    const double alpha = a(rng), x0 = x(rng), p0 = k(rng), t = tt(rng);
    const PacketParams p(alpha, x0, p0);
    const cplx expected = oracle::midpoint(
        [&](double q) {
          return std::conj(oracle::phi_free(q, t, alpha, x0, p0)) * oracle::phi_free(q, 0.0, alpha, x0, p0);
        },
        p0 - 14.0 / alpha, p0 + 14.0 / alpha, 40000);
    ClosedFormSampler sampler(SystemSpec::free_particle(), p);
    CHECK(std::abs(sampler.autocorrelation(t) - expected) < 1e-10);
    CHECK(free_autocorr_modulus_sq(p, t) == doctest::Approx(std::norm(expected)).epsilon(1e-9));
  }
}

TEST_CASE("time reversal A(-t) = conj A(t)") {
  const PacketParams p(1.1, 0.4, 0.7);
  for (const auto& sys : {SystemSpec::free_particle(), SystemSpec::uniform_acceleration(0.3)}) {
    for (double t : {0.3, 2.0, 9.0})
      CHECK(std::abs(closed_form_autocorr(sys, p, -t).A - std::conj(closed_form_autocorr(sys, p, t).A)) < 1e-14);
  }
  const PacketParams c1(1.0, 0.6, -0.2);
  for (double t : {0.3, 2.0, 9.0})
    CHECK(std::abs(closed_form_autocorr(SystemSpec::harmonic(1.0), c1, -t).A -
                   std::conj(closed_form_autocorr(SystemSpec::harmonic(1.0), c1, t).A)) < 1e-13);
}

TEST_CASE("acceleration modulus is the free modulus with substituted momentum") {
  const PacketParams p(0.8, 0.5, -1.2);
  const double F = 0.9, t0 = p.spreading_time();
  for (double t = 0.0; t < 20.0; t += 0.37) {
    const double p_eff_sq = 1.44 + F * t0 * F * t0 * (1.0 + (t / (2 * t0)) * (t / (2 * t0)));
    const double free = free_autocorr_modulus_sq(p.with_p0(std::sqrt(p_eff_sq)), t);
    const double accel = acceleration_autocorr_modulus_sq(p, F, t);
    CHECK(std::abs(accel - free) <= 1e-14 * std::max(1.0, free));
    CHECK(std::abs(closed_form_autocorr(SystemSpec::uniform_acceleration(F), p, t).modulus_sq - accel) < 1e-14);
  }
}

TEST_CASE("acceleration A(t) against position-space quadrature") {
  const PacketParams p(1.0, 0.3, -1.0);
  const double F = 1.0;
  const auto g = Grid::closed(-40.0, 40.0, 8001);
  const auto psi0 = eval_wavefunction(SystemSpec::uniform_acceleration(F), p, Space::Position, g, 0.0);
  for (double t : {0.5, 1.3, 2.0}) {
    const auto psit = eval_wavefunction(SystemSpec::uniform_acceleration(F), p, Space::Position, g, t);
    cplx A = 0.0;
    const auto w = quadrature_weights(g);
    for (std::size_t j = 0; j < g.size(); ++j) A += w[j] * std::conj(psit.samples[j]) * psi0.samples[j];
    CHECK(std::abs(closed_form_autocorr(SystemSpec::uniform_acceleration(F), p, t).A - A) < 1e-10);
  }
}

namespace {
cplx grid_overlap(const Wavefunction& a, const Wavefunction& b) {
  const auto w = quadrature_weights(a.grid);
  cplx s = 0.0;
  for (std::size_t j = 0; j < a.samples.size(); ++j) s += w[j] * std::conj(a.samples[j]) * b.samples[j];
  return s;
}
}  // namespace

TEST_CASE("harmonic closed forms against grid overlap") {
  const auto sho = SystemSpec::harmonic(1.3);
  const auto g = Grid::closed(-15.0, 15.0, 3001);
  SUBCASE("case I") {
    const PacketParams p(1.0 / std::sqrt(1.3), 0.9, 0.6);  // beta = beta0
    CHECK(classify(sho, p) == ClosedFormCase::HarmonicMinimumUncertainty);
    const auto psi0 = eval_wavefunction(sho, p, Space::Position, g, 0.0);
    ClosedFormSampler sampler(sho, p, true);
    for (double t : {0.4, 1.9, 3.7, 7.5}) {
      const auto psit = eval_wavefunction(sho, p, Space::Position, g, t);
      const auto s = sampler(t);
      CHECK(std::abs(s.A - grid_overlap(psit, psi0)) < 1e-12);
      // Anticorrelation: overlap of the mirrored packet with the initial one.
      Wavefunction mirrored(g);
      for (std::size_t j = 0; j < g.size(); ++j) mirrored.samples[j] = psit.samples[g.size() - 1 - j];
      CHECK(std::abs(*s.A_bar - grid_overlap(mirrored, psi0)) < 1e-12);
    }
  }
  SUBCASE("case II") {
    const PacketParams p(0.4, 0.0, 0.0);
    CHECK(classify(sho, p) == ClosedFormCase::HarmonicCentered);
    const auto psi0 = eval_wavefunction(sho, p, Space::Position, g, 0.0);
    ClosedFormSampler sampler(sho, p);
    for (double t : {0.4, 1.9, 3.7, 7.5, 12.0}) {
      const auto psit = eval_wavefunction(sho, p, Space::Position, g, t);
      CHECK(std::abs(sampler.autocorrelation(t) - grid_overlap(psit, psi0)) < 1e-12);
    }
  }
}

TEST_CASE("harmonic packet is reflected through the origin each half period") {
  const double w = 1.0;
  const auto sho = SystemSpec::harmonic(w);
  const PacketParams p(0.7, 1.1, -0.4);  // general width
  const auto g = Grid::closed(-15.0, 15.0, 601);
  const auto psi0 = eval_wavefunction(sho, p, Space::Position, g, 0.0);
  const auto half = eval_wavefunction(sho, p, Space::Position, g, pi / w);
  const auto full = eval_wavefunction(sho, p, Space::Position, g, 2 * pi / w);
  for (std::size_t j = 0; j < g.size(); ++j) {
    CHECK(std::abs(full.samples[j] + psi0.samples[j]) < 1e-12);
    CHECK(std::abs(half.samples[g.size() - 1 - j] - cplx(0.0, -1.0) * psi0.samples[j]) < 1e-12);
  }
}

TEST_CASE("case I density peak follows the classical orbit") {
  const auto sho = SystemSpec::harmonic(1.0);
  const PacketParams p(1.0, 1.0, 0.0);
  const auto g = Grid::closed(-6.0, 6.0, 1201);
  const auto psi = eval_wavefunction(sho, p, Space::Position, g, pi / 2);
  std::size_t peak = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (std::abs(psi.samples[j]) > std::abs(psi.samples[peak])) peak = j;
  CHECK(std::abs(g[peak]) < 1e-12);
  CHECK(std::abs(moments(sho, p, pi / 2).mean_x) < 1e-15);
}

TEST_CASE("case I autocorrelation examples") {
  const double w = 2.0, T = 2 * pi / w;
  const auto sho = SystemSpec::harmonic(w);
  const double beta0 = 1.0 / std::sqrt(w);
  const PacketParams p(beta0, 0.8, -0.5);
  ClosedFormSampler sampler(sho, p);
  CHECK(std::abs(sampler(T).modulus_sq - 1.0) < 1e-14);
  const double K = 0.64 / (beta0 * beta0) + beta0 * beta0 * 0.25;
  CHECK(sampler(T / 2).modulus_sq == doctest::Approx(std::exp(-2.0 * K)).epsilon(1e-13));
  for (double t = 0.0; t < T; t += 0.05) CHECK(std::abs(sampler(t + T).modulus_sq - sampler(t).modulus_sq) < 1e-14);
}

TEST_CASE("case II examples") {
  const double w = 1.5;
  const auto sho = SystemSpec::harmonic(w);
  const double beta0 = 1.0 / std::sqrt(w);
  SUBCASE("r = 1 is a stationary state") {
    ClosedFormSampler sampler(sho, PacketParams(beta0, 0.0, 0.0));
    for (double t = 0.0; t < 20.0; t += 0.3)
      CHECK(std::abs(sampler.autocorrelation(t) - std::exp(cplx(0.0, w * t / 2))) < 1e-12);
  }
  SUBCASE("r -> 1/r invariance and half-period returns") {
    const double beta = 0.45;
    ClosedFormSampler a(sho, PacketParams(beta, 0.0, 0.0));
    ClosedFormSampler b(sho, PacketParams(beta0 * beta0 / beta, 0.0, 0.0));
    for (double t = 0.0; t < 20.0; t += 0.11) CHECK(std::abs(a.autocorrelation(t) - b.autocorrelation(t)) < 1e-14);
    const double T = 2 * pi / w;
    CHECK(std::abs(std::abs(a.autocorrelation(T / 2)) - 1.0) < 1e-12);
    CHECK(std::abs(a.autocorrelation(T / 2) - cplx(0.0, 1.0)) < 1e-12);
    CHECK(std::abs(a.autocorrelation(T) + 1.0) < 1e-12);
  }
}

TEST_CASE("anticorrelation examples") {
  const double w = 1.0, T = 2 * pi;
  SUBCASE("unit modulus at odd half periods, stated modulus elsewhere") {
    const PacketParams p(1.0, 1.2, 0.7);
    const double K2 = 1.44 + 0.49;
    for (int k = 0; k < 3; ++k) CHECK(std::abs(std::abs(closed_form_anticorr(p, w, (2 * k + 1) * T / 2)) - 1.0) < 1e-12);
    CHECK(std::norm(closed_form_anticorr(p, w, 0.0)) == doctest::Approx(std::exp(-2.0 * K2)).epsilon(1e-13));
    for (double t = 0.0; t < T; t += 0.2)
      CHECK(std::norm(closed_form_anticorr(p, w, t)) ==
            doctest::Approx(std::exp(-K2 * (1.0 + std::cos(w * t)))).epsilon(1e-12));
  }
  SUBCASE("centered ground state") {
    for (double t = 0.0; t < 10.0; t += 0.5) CHECK(std::abs(std::norm(closed_form_anticorr(PacketParams(1.0, 0.0, 0.0), w, t)) - 1.0) < 1e-14);
  }
  SUBCASE("non minimum-uncertainty widths are rejected") {
    CHECK_THROWS_AS(closed_form_anticorr(PacketParams(1.3, 0.0, 0.0), w, 1.0), UnsupportedCaseError);
  }
}

TEST_CASE("cases without a closed form are rejected") {
  try {
    classify(SystemSpec::harmonic(1.0), PacketParams(1.4, 0.5, 0.0));
    FAIL("expected UnsupportedCaseError");
  } catch (const UnsupportedCaseError& e) {
    CHECK(e.kind() == Unsupported::NoClosedForm);
  }
  CHECK_THROWS_AS(ClosedFormSampler(SystemSpec::inverted(1.0), PacketParams(1.0, 0.3, 0.0)), UnsupportedCaseError);
  CHECK_THROWS_AS(ClosedFormSampler(SystemSpec::inverted(1.0), PacketParams(1.5, 0.0, 0.0)), UnsupportedCaseError);
  CHECK_THROWS_AS(ClosedFormSampler(SystemSpec::free_particle(), PacketParams(1.0, 0.0, 0.0), true),
                  UnsupportedCaseError);
}

TEST_CASE("inverted oscillator autocorrelation against a complex Gaussian integral") {
  // psi(x,t) = N exp(-a x^2 + b x) with the continued kernel; A = integral psi_t* psi_0.
  const double wt = 0.8;
  const auto inv = SystemSpec::inverted(wt);
  const double beta0 = 1.0 / std::sqrt(wt);
  const PacketParams p(beta0, 0.0, 0.9);
  const auto g = Grid::closed(-40.0, 40.0, 16001);
  const auto psi0 = eval_wavefunction(inv, p, Space::Position, g, 0.0);
  ClosedFormSampler sampler(inv, p);
  for (double t : {0.5, 1.5, 3.0}) {
    const auto psit = eval_wavefunction(inv, p, Space::Position, g, t);
    CHECK(std::abs(sampler.autocorrelation(t) - grid_overlap(psit, psi0)) < 1e-11);
  }
}

namespace {
// psi = exp(-a x^2 + b x + c) solves i hbar psi_t = -hbar^2/2m psi'' + V psi for quadratic V = k x^2 / 2
// when (hbar = m = 1) a' = -i (2 a^2 - k/2), b' = -2 i a b, c' = i (b^2 / 2 - a).
struct GaussianState {
  cplx a, b, c;
};

GaussianState evolve_gaussian(GaussianState s, double k, double t, int steps) {
  auto rhs = [k](const GaussianState& g) {
    const cplx i(0.0, 1.0);
    return GaussianState{-i * (2.0 * g.a * g.a - k / 2.0), -2.0 * i * g.a * g.b, i * (g.b * g.b / 2.0 - g.a)};
  };
  auto add = [](const GaussianState& g, const GaussianState& d, double h) {
    return GaussianState{g.a + h * d.a, g.b + h * d.b, g.c + h * d.c};
  };
  const double h = t / steps;
  for (int n = 0; n < steps; ++n) {
    const auto k1 = rhs(s);
    const auto k2 = rhs(add(s, k1, h / 2));
    const auto k3 = rhs(add(s, k2, h / 2));
    const auto k4 = rhs(add(s, k3, h));
    s.a += h / 6 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
    s.b += h / 6 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
    s.c += h / 6 * (k1.c + 2.0 * k2.c + 2.0 * k3.c + k4.c);
  }
  return s;
}

GaussianState initial_gaussian(double beta, double x0, double p0) {
  return {1.0 / (2 * beta * beta), cplx(x0 / (beta * beta), p0),
          cplx(-x0 * x0 / (2 * beta * beta) - 0.25 * std::log(pi * beta * beta), -p0 * x0)};
}

cplx gaussian_overlap(const GaussianState& bra, const GaussianState& ket) {
  return oracle::gaussian_integral(std::conj(bra.a) + ket.a, std::conj(bra.b) + ket.b, std::conj(bra.c) + ket.c);
}
}  // namespace

TEST_CASE("inverted oscillator A(t) against the Gaussian parameter equations") {
  const double w = 1.0;
  const PacketParams p(1.0, 0.0, 0.7);
  const auto s0 = initial_gaussian(1.0, 0.0, 0.7);
  ClosedFormSampler sampler(SystemSpec::inverted(w), p);
  for (double t : {0.5, 2.0, 6.0}) {
    const cplx A = gaussian_overlap(evolve_gaussian(s0, -w * w, t, 20000), s0);
    CHECK(std::abs(sampler.autocorrelation(t) - A) < 1e-10);
  }
}

TEST_CASE("inverted oscillator long-time modulus including the x0 factor") {
  const double w = 1.0, t = 30.0, p0 = 0.7;
  for (double x0 : {0.0, 0.6}) {
    const auto s0 = initial_gaussian(1.0, x0, p0);
    const double mod_sq = std::norm(gaussian_overlap(evolve_gaussian(s0, -w * w, t, 60000), s0));
    const double predicted = 2.0 * std::exp(-w * t) * std::exp(-p0 * p0 / w) * std::exp(-x0 * x0);
    CHECK(mod_sq == doctest::Approx(predicted).epsilon(1e-9));
    if (x0 == 0.0) {
      ClosedFormSampler sampler(SystemSpec::inverted(w), PacketParams(1.0, 0.0, p0));
      CHECK(sampler(t).modulus_sq == doctest::Approx(mod_sq).epsilon(1e-9));
    }
  }
}

TEST_CASE("harmonic case I against the Gaussian parameter equations") {
  const double w = 1.4;
  const double beta0 = 1.0 / std::sqrt(w);
  const auto s0 = initial_gaussian(beta0, 0.8, -0.3);
  ClosedFormSampler sampler(SystemSpec::harmonic(w), PacketParams(beta0, 0.8, -0.3));
  for (double t : {0.3, 2.2, 5.9}) {
    const cplx A = gaussian_overlap(evolve_gaussian(s0, w * w, t, 20000), s0);
    CHECK(std::abs(sampler.autocorrelation(t) - A) < 1e-10);
  }
}

TEST_CASE("moment formulas") {
  SUBCASE("free energy moments against momentum quadrature") {
    for (double p0 : {0.0, 1.0, -2.0}) {
      const PacketParams p(0.9, 0.0, p0);
      const auto e = energy_moments(SystemSpec::free_particle(), p);
      const auto h1 = oracle::midpoint([&](double q) { return std::norm(oracle::phi_free(q, 0, 0.9, 0, p0)) * q * q / 2; },
                                       p0 - 15, p0 + 15, 20000);
      const auto h2 = oracle::midpoint(
          [&](double q) { return std::norm(oracle::phi_free(q, 0, 0.9, 0, p0)) * q * q * q * q / 4; }, p0 - 15, p0 + 15,
          20000);
      CHECK(e.mean_H == doctest::Approx(h1.real()).epsilon(1e-10));
      CHECK(e.mean_H2 == doctest::Approx(h2.real()).epsilon(1e-10));
      CHECK(e.delta_H * e.delta_H == doctest::Approx(h2.real() - h1.real() * h1.real()).epsilon(1e-9));
    }
    const auto e = energy_moments(SystemSpec::free_particle(), PacketParams(1.0, 0.0, 0.0));
    CHECK(e.mean_H == doctest::Approx(0.25));
    CHECK(e.delta_H * e.delta_H == doctest::Approx(0.125));
    const auto e1 = energy_moments(SystemSpec::free_particle(), PacketParams(1.0, 0.0, 1.0));
    CHECK(e1.delta_H * e1.delta_H == doctest::Approx(5.0 / 8.0));
  }
  SUBCASE("energy moments only for the free particle") {
    try {
      energy_moments(SystemSpec::harmonic(1.0), PacketParams(1.0, 0.0, 0.0));
      FAIL("expected UnsupportedCaseError");
    } catch (const UnsupportedCaseError& e) {
      CHECK(e.kind() == Unsupported::EnergyMoments);
    }
    CHECK_FALSE(moments(SystemSpec::harmonic(1.0), PacketParams(1.0, 0.0, 0.0), 1.0).energy.has_value());
  }
  SUBCASE("spreads and centres") {
    const PacketParams p(1.3, 0.5, 0.8);
    const double t0 = p.spreading_time();
    const auto free = moments(SystemSpec::free_particle(), p, 2.0);
    CHECK(free.spread_x == doctest::Approx(p.delta_x0() * std::sqrt(1 + 4.0 / (t0 * t0))));
    CHECK(free.mean_x == doctest::Approx(0.5 + 1.6));
    const auto acc = moments(SystemSpec::uniform_acceleration(0.6), p, 2.0);
    CHECK(acc.spread_x == doctest::Approx(free.spread_x));
    CHECK(acc.mean_x == doctest::Approx(0.5 + 1.6 + 0.6 * 2.0));
    const auto sho = SystemSpec::harmonic(2.0);
    const PacketParams q(1.0 / std::sqrt(2.0), 1.0, 0.4);
    for (double t = 0; t < 5; t += 0.5) {
      CHECK(moments(sho, q, t).spread_x == doctest::Approx(q.beta() / std::sqrt(2.0)).epsilon(1e-14));
      CHECK(moments(sho, q, t).mean_x == doctest::Approx(std::cos(2 * t) + 0.2 * std::sin(2 * t)));
    }
    const auto inv = SystemSpec::inverted(0.7);
    CHECK(moments(inv, p, 0.0).spread_x == doctest::Approx(p.beta() / std::sqrt(2.0)));
    CHECK(moments(inv, p, 1.5).mean_x ==
          doctest::Approx(0.5 * std::cosh(1.05) + 0.8 / 0.7 * std::sinh(1.05)));
    CHECK(std::abs(oscillator_width(inv, p, 1.5)) >= p.beta());
  }
}

TEST_CASE("sampled moments of the closed forms match the moment formulas") {
  const auto g = Grid::closed(-30.0, 30.0, 6001);
  const PacketParams p(0.8, 0.6, -0.9);
  for (const auto& sys : {SystemSpec::free_particle(), SystemSpec::uniform_acceleration(0.5),
                          SystemSpec::harmonic(1.2), SystemSpec::inverted(0.5)}) {
    const auto psi = eval_wavefunction(sys, p, Space::Position, g, 1.7);
    double n = 0, m1 = 0, m2 = 0;
    const auto w = quadrature_weights(g);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double d = w[j] * std::norm(psi.samples[j]);
      n += d;
      m1 += d * g[j];
      m2 += d * g[j] * g[j];
    }
    const auto m = moments(sys, p, 1.7);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m1 == doctest::Approx(m.mean_x).epsilon(1e-10));
    CHECK(std::sqrt(m2 - m1 * m1) == doctest::Approx(m.spread_x).epsilon(1e-10));
  }
}

TEST_CASE("modulus bounded by one on dense sweeps") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 5; ++n) {
    const double x0 = u(rng), p0 = u(rng);
    ClosedFormSampler free(SystemSpec::free_particle(), PacketParams(1.0, x0, p0));
    ClosedFormSampler acc(SystemSpec::uniform_acceleration(u(rng)), PacketParams(1.0, x0, p0));
    ClosedFormSampler c1(SystemSpec::harmonic(1.0), PacketParams(1.0, x0, p0));
    ClosedFormSampler c2(SystemSpec::harmonic(1.0), PacketParams(std::exp(u(rng)), 0.0, 0.0));
    ClosedFormSampler inv(SystemSpec::inverted(1.0), PacketParams(1.0, 0.0, p0));
    for (double t = 0.0; t < 30.0; t += 0.01) {
      CHECK(free(t).modulus_sq <= 1.0 + 1e-12);
      CHECK(acc(t).modulus_sq <= 1.0 + 1e-12);
      CHECK(c1(t).modulus_sq <= 1.0 + 1e-12);
      CHECK(c2(t).modulus_sq <= 1.0 + 1e-12);
      CHECK(inv(t).modulus_sq <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("autocorrelation sample invariants") {
  const auto s = AutocorrSample::make(0.0, 1.0);
  CHECK(s.hilbert_distance == 0.0);
  CHECK(s.modulus_sq == 1.0);
  const auto u = AutocorrSample::make(1.0, cplx(-0.6, 0.8));
  CHECK(u.hilbert_distance == doctest::Approx(3.2));
  CHECK(u.modulus_sq == doctest::Approx(1.0));
}

TEST_CASE("free saturation at long times") {
  const PacketParams p(1.0, 0.0, 1.0);
  const double t = 100.0 * p.spreading_time();
  const double dp_sq = p.delta_p0() * p.delta_p0();
  const double limit = std::exp(-1.0 / dp_sq);
  CHECK(free_autocorr_modulus_sq(p, t) * std::sqrt(1 + t * t / 4) == doctest::Approx(limit).epsilon(1e-3));
}

TEST_CASE("free short-time expansion") {
  // 1 - |A|^2 = (alpha^2 t^2 / 2 t0^2)(p0^2 + 1/4 alpha^2) + O(t^4)
  const PacketParams p(1.2, 0.3, 0.8);
  const double t0 = p.spreading_time();
  const double c2 = 1.44 / (2 * t0 * t0) * (0.64 + 1.0 / (4 * 1.44));
  for (double t : {1e-3 * t0, 5e-3 * t0}) {
    const double y = 1.0 - free_autocorr_modulus_sq(p, t);
    CHECK(std::abs(y / (t * t) - c2) < 1e-4 * c2);
  }
}
