#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gammapair/model.hpp"
#include "gammapair/quadrature.hpp"
#include "gammapair/rng.hpp"
#include "gammapair/stats.hpp"
#include "reference_values.hpp"

using namespace gammapair;

TEST_CASE("antithetic log covariance equals 1 - pi^2/6") {
  CHECK(std::fabs(antithetic_log_cov() - refvals::kAntitheticLogCov) < 1e-15);
  CHECK(antithetic_log_cov() == doctest::Approx(-0.644934).epsilon(5e-6));
}

TEST_CASE("antithetic log covariance matches its defining integral") {
  // E[ln U ln(1-U)] via quadrature; both logs blow up at the endpoints,
  // which the adaptive splitter must absorb.
  const double moment = quad_1d(
      [](double u) { return std::log(u) * std::log1p(-u); }, 1e-300, 1.0,
      1e-10);
  CHECK(std::fabs(moment - refvals::kLogLogIntegral) < 1e-9);
  CHECK(std::fabs((moment - 1.0) - antithetic_log_cov()) < 1e-9);
}

TEST_CASE("antithetic log covariance matches a Monte Carlo estimate") {
  RngStream stream(101, 0);
  SummaryStats stats;
  for (int i = 0; i < 1000000; ++i) {
    const double u = stream.next_uniform();
    stats.add(std::log(u), std::log1p(-u));
  }
  CHECK(std::fabs(stats.cov() - antithetic_log_cov()) < 0.005);
}

TEST_CASE("method-1 correlation spot values") {
  CHECK(std::fabs(rho_method1(0.0, 2, 3) - refvals::kRhoM1_0_2_3) < 1e-15);
  CHECK(std::fabs(rho_method1(2.0, 5, 8) - refvals::kRhoM1_2_5_8) < 1e-15);
  CHECK(std::fabs(rho_method1(7.0, 12, 18) - refvals::kRhoM1_7_12_18) <
        1e-15);
  // Fully antithetic single pair: the correlation floor itself.
  CHECK(rho_method1(0.0, 1, 1) == antithetic_log_cov());
}

TEST_CASE("method-1 lower bound is attained exactly at alpha0 = 0") {
  CHECK(rho_method1_lower_bound(1, 1) == antithetic_log_cov());
  CHECK(std::fabs(rho_method1_lower_bound(2, 8) - (-0.322467)) < 5e-7);
  for (int r = 1; r <= 20; ++r) {
    for (int s = r; s <= 20; ++s) {
      CHECK(rho_method1(0.0, r, s) == rho_method1_lower_bound(r, s));
    }
  }
}

TEST_CASE("method-1 correlation is increasing in the shock shape") {
  RngStream stream(55, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(stream.next_uniform() * 12);
    const int s = r + static_cast<int>(stream.next_uniform() * 8);
    const double a = stream.next_uniform() * 10.0;
    const double b = a + 0.5 + stream.next_uniform() * 5.0;
    CHECK(rho_method1(a, r, s) < rho_method1(b, r, s));
  }
}

TEST_CASE("method-2 correlation spot values") {
  CHECK(std::fabs(rho_method2(0.0, 4, 4, -1.0) - (-0.25)) < 1e-15);
  CHECK(std::fabs(rho_method2(1.0, 6, 9, refvals::kM2ExampleTheta) -
                  (-0.05)) < 1e-12);
  for (int r = 1; r <= 6; ++r) {
    CHECK(rho_method2(0.0, r, r + 2, 0.0) == 0.0);
  }
}

TEST_CASE("method-2 correlation never drops below -1/4") {
  RngStream stream(56, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = 1 + static_cast<int>(stream.next_uniform() * 15);
    const int s = r + static_cast<int>(stream.next_uniform() * 10);
    const double a = stream.next_uniform() * 8.0;
    const double theta = -stream.next_uniform();
    CHECK(rho_method2(a, r, s, theta) >= -0.25 - 1e-15);
  }
}

TEST_CASE("method-2 feasibility floor") {
  CHECK(std::fabs(rho_method2_lower_bound(7, 10) - refvals::kM2Bound_7_10) <
        1e-15);
  CHECK(std::fabs(rho_method2_lower_bound(7, 10) - (-0.0597)) < 1e-4);
  CHECK(std::fabs(rho_method2_lower_bound(6, 6) - (-1.0 / 24.0)) < 1e-15);
  // The floor tends to -1/4 as both shapes grow together.
  CHECK(std::fabs(rho_method2_lower_bound(1e6, 1e6) - (-0.25)) < 1e-3);
  CHECK_THROWS_AS(rho_method2_lower_bound(5, 9), std::domain_error);
  CHECK_THROWS_AS(rho_method2_lower_bound(8, 7), std::domain_error);
}

TEST_CASE("bivariate uniform moments") {
  CHECK(uniform_pair_corr(-1.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(uniform_pair_corr(0.0) == 0.0);
  CHECK(uniform_pair_log_cov(-1.0) == -0.25);
  CHECK(uniform_pair_log_cov(0.0) == 0.0);
  CHECK_THROWS_AS(uniform_pair_corr(1.5), std::domain_error);
  CHECK_THROWS_AS(uniform_pair_log_cov(-1.0001), std::domain_error);
}

TEST_CASE("log cross-moment of the coupled uniform pair via 2-d quadrature") {
  const double theta = -0.8;
  const auto density = [theta](double u, double v) {
    return 1.0 + theta * (1.0 - 2.0 * u) * (1.0 - 2.0 * v);
  };
  const double moment = quad_1d(
      [&](double u) {
        return std::log(u) * quad_1d(
                                 [&](double v) {
                                   return std::log(v) * density(u, v);
                                 },
                                 1e-300, 1.0, 1e-11);
      },
      1e-300, 1.0, 1e-9);
  // Cov = E[ln U ln V] - E[ln U] E[ln V] = moment - 1.
  CHECK(std::fabs((moment - 1.0) - uniform_pair_log_cov(theta)) < 1e-8);
}

TEST_CASE("uniform pair correlation against Monte Carlo") {
  // Conditional inversion written out longhand so this check does not
  // lean on the sampler module it is meant to corroborate.
  const double theta = -0.6;
  RngStream stream(77, 0);
  SummaryStats stats;
  for (int i = 0; i < 1000000; ++i) {
    const double u = stream.next_uniform();
    const double w = stream.next_uniform();
    const double k = theta * (1.0 - 2.0 * u);
    double v;
    if (std::fabs(k) < 1e-12) {
      v = w;
    } else {
      v = 2.0 * w / (1.0 + k + std::sqrt((1.0 + k) * (1.0 + k) - 4.0 * k * w));
    }
    stats.add(u, v);
  }
  CHECK(std::fabs(stats.corr() - uniform_pair_corr(theta)) < 0.004);
}

TEST_CASE("normalize_target validates and swaps") {
  const NormalizedTarget t = normalize_target(10.0, 7.0, -0.05);
  CHECK(t.swapped);
  CHECK(t.spec.m == 7.0);
  CHECK(t.spec.n == 10.0);
  CHECK(t.spec.rho0 == -0.05);
  CHECK_FALSE(normalize_target(7.0, 10.0, -0.05).swapped);
  CHECK_THROWS_AS(normalize_target(0.0, 1.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(normalize_target(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(normalize_target(1.0, 1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(normalize_target(1.0, 1.0, -1.0), std::domain_error);
}

TEST_CASE("plan factories validate and fill the correlation") {
  const Method1Plan p1 = make_method1_plan(2, 3, 0.0);
  CHECK(p1.rho_theoretical == rho_method1(0.0, 2, 3));
  const Method2Plan p2 = make_method2_plan(6, 9, 1.0, -0.5);
  CHECK(p2.rho_theoretical == rho_method2(1.0, 6, 9, -0.5));
  CHECK_THROWS_AS(make_method1_plan(0, 3, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_method1_plan(4, 3, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_method1_plan(2, 3, -0.5), std::domain_error);
  CHECK_THROWS_AS(make_method1_plan(2, 3, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_method2_plan(2, 3, 1.0, -1.5), std::domain_error);
}

TEST_CASE("correlation is invariant under the common rate") {
  const Method1Plan a = make_method1_plan(3, 5, 1.5, 1.0);
  const Method1Plan b = make_method1_plan(3, 5, 1.5, 7.25);
  CHECK(a.rho_theoretical == b.rho_theoretical);
  const Method2Plan c = make_method2_plan(4, 6, 2.0, -0.8, 1.0);
  const Method2Plan d = make_method2_plan(4, 6, 2.0, -0.8, 0.125);
  CHECK(c.rho_theoretical == d.rho_theoretical);
}

TEST_CASE("gamma pdf and cdf spot checks") {
  // Unit-rate shape 1 is the standard exponential.
  CHECK(gamma_pdf(0.7, {1.0, 1.0}) ==
        doctest::Approx(std::exp(-0.7)).epsilon(1e-14));
  CHECK(gamma_cdf(0.7, {1.0, 1.0}) ==
        doctest::Approx(1.0 - std::exp(-0.7)).epsilon(1e-13));
  // Rate 2, shape 2 at x = 1: 4 x e^{-2x}.
  CHECK(gamma_pdf(1.0, {2.0, 2.0}) ==
        doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(gamma_pdf(-1.0, {1.0, 2.0}) == 0.0);
  CHECK(gamma_cdf(0.0, {1.0, 2.0}) == 0.0);
  CHECK_THROWS_AS(gamma_pdf(1.0, {0.0, 1.0}), std::domain_error);
}
