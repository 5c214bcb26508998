#include "gammapair/density.hpp"

#include <cmath>
#include <stdexcept>

#include "gammapair/specfun.hpp"

namespace gammapair {
namespace {

// ln(1 + e^d) without overflow for any d.
inline double log1p_exp(double d) {
  return std::max(d, 0.0) + std::log1p(std::exp(-std::fabs(d)));
}

}  // namespace

double support_boundary(double y1) {
  if (!(y1 > 0.0)) throw std::domain_error("support_boundary: requires y1 > 0");
  return -std::log1p(-std::exp(-y1));
}

double joint_density_r1s1(double y1, double y2, double alpha0) {
  if (!(alpha0 > 0.0)) {
    throw std::domain_error("joint_density_r1s1: requires alpha0 > 0");
  }
  if (!(y1 > 0.0)) return 0.0;
  const double d = y1 - y2;
  const double x0 = y1 - log1p_exp(d);
  if (!(x0 > 0.0)) return 0.0;
  // Log space keeps e^y1 + e^y2 from overflowing far out in the tails.
  const double log_sum = std::max(y1, y2) + std::log1p(std::exp(-std::fabs(d)));
  return std::exp((alpha0 - 1.0) * std::log(x0) - log_gamma(alpha0) - log_sum);
}

double integral_identity(double a, double b) {
  if (!(a > 0.0)) throw std::domain_error("integral_identity: requires a > 0");
  const double la = std::log(a);
  // ln(a + e^b) evaluated as a stable two-term log-sum-exp.
  const double log_sum =
      std::max(la, b) + std::log1p(std::exp(-std::fabs(la - b)));
  return (log_sum - b) / a;
}

}  // namespace gammapair
