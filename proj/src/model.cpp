#include "gammapair/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gammapair/specfun.hpp"

namespace gammapair {
namespace {

void check_pair_shape(double alpha0, int r, int s, const char* who) {
  if (!(alpha0 >= 0.0)) {
    throw std::domain_error(std::string(who) + ": requires alpha0 >= 0");
  }
  if (r < 1 || s < r) {
    throw std::domain_error(std::string(who) + ": requires 1 <= r <= s");
  }
}

void check_theta(double theta, const char* who) {
  if (!(theta >= -1.0 && theta <= 1.0)) {
    throw std::domain_error(std::string(who) +
                            ": requires theta in [-1, 1]");
  }
}

}  // namespace

double antithetic_log_cov() { return 1.0 - kPi * kPi / 6.0; }

double gamma_pdf(double x, const GammaParams& params) {
  if (!(params.rate > 0.0) || !(params.shape > 0.0)) {
    throw std::domain_error("gamma_pdf: requires rate > 0 and shape > 0");
  }
  if (!(x > 0.0)) return 0.0;
  const double lp = params.shape * std::log(params.rate) +
                    (params.shape - 1.0) * std::log(x) - params.rate * x -
                    log_gamma(params.shape);
  return std::exp(lp);
}

double gamma_cdf(double x, const GammaParams& params) {
  if (!(params.rate > 0.0) || !(params.shape > 0.0)) {
    throw std::domain_error("gamma_cdf: requires rate > 0 and shape > 0");
  }
  if (!(x > 0.0)) return 0.0;
  return reg_inc_gamma_p(params.shape, params.rate * x);
}

NormalizedTarget normalize_target(double m, double n, double rho0) {
  if (!(m > 0.0) || !(n > 0.0)) {
    throw std::domain_error("normalize_target: requires m > 0 and n > 0");
  }
  if (!(rho0 > -1.0 && rho0 < 0.0)) {
    std::ostringstream msg;
    msg << "normalize_target: rho0 must lie in (-1, 0), got " << rho0;
    throw std::domain_error(msg.str());
  }
  NormalizedTarget out;
  out.spec = TargetSpec{m, n, rho0};
  out.swapped = m > n;
  if (out.swapped) std::swap(out.spec.m, out.spec.n);
  return out;
}

Method1Plan make_method1_plan(int r, int s, double alpha0, double rate) {
  check_pair_shape(alpha0, r, s, "make_method1_plan");
  if (!(rate > 0.0)) {
    throw std::domain_error("make_method1_plan: requires rate > 0");
  }
  Method1Plan plan;
  plan.r = r;
  plan.s = s;
  plan.alpha0 = alpha0;
  plan.rate = rate;
  plan.rho_theoretical = rho_method1(alpha0, r, s);
  return plan;
}

Method2Plan make_method2_plan(int r, int s, double alpha0, double theta,
                              double rate) {
  check_pair_shape(alpha0, r, s, "make_method2_plan");
  check_theta(theta, "make_method2_plan");
  if (!(rate > 0.0)) {
    throw std::domain_error("make_method2_plan: requires rate > 0");
  }
  Method2Plan plan;
  plan.r = r;
  plan.s = s;
  plan.alpha0 = alpha0;
  plan.theta = theta;
  plan.rate = rate;
  plan.rho_theoretical = rho_method2(alpha0, r, s, theta);
  return plan;
}

double rho_method1(double alpha0, int r, int s) {
  check_pair_shape(alpha0, r, s, "rho_method1");
  return (alpha0 + r * antithetic_log_cov()) /
         std::sqrt((alpha0 + r) * (alpha0 + s));
}

double rho_method1_lower_bound(int r, int s) {
  return rho_method1(0.0, r, s);
}

double rho_method2(double alpha0, int r, int s, double theta) {
  check_pair_shape(alpha0, r, s, "rho_method2");
  check_theta(theta, "rho_method2");
  return (alpha0 + r * theta * 0.25) /
         std::sqrt((alpha0 + r) * (alpha0 + s));
}

double rho_method2_lower_bound(double m, double n) {
  if (!(m >= 6.0)) {
    throw std::domain_error("rho_method2_lower_bound: requires m >= 6");
  }
  if (!(n >= m)) {
    throw std::domain_error("rho_method2_lower_bound: requires n >= m");
  }
  return -(m - 5.0) / (4.0 * std::sqrt(m * n));
}

double uniform_pair_corr(double theta) {
  check_theta(theta, "uniform_pair_corr");
  return theta / 3.0;
}

double uniform_pair_log_cov(double theta) {
  check_theta(theta, "uniform_pair_log_cov");
  return theta * 0.25;
}

}  // namespace gammapair
