#include "gammapair/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace gammapair {
namespace {

// One standard normal via Box-Muller; exactly two uniforms.
double sample_normal(RngStream& stream) {
  const double u1 = stream.next_uniform();
  const double u2 = stream.next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// Marsaglia-Tsang squeeze/rejection, valid for shape >= 1.
double marsaglia_tsang(double shape, RngStream& stream) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma(double shape, RngStream& stream) {
  if (!(shape >= 0.0)) {
    throw std::domain_error("sample_gamma: requires shape >= 0");
  }
  if (shape == 0.0) return 0.0;
  if (shape == std::floor(shape) && shape <= 16384.0) {
    // Sum of `shape` unit exponentials; keeps the draw count deterministic
    // for the plan shapes used here.
    double acc = 0.0;
    for (long long i = 0; i < static_cast<long long>(shape); ++i) {
      acc -= std::log(stream.next_uniform());
    }
    return acc;
  }
  if (shape < 1.0) {
    // Boost the shape past 1 and undo with the power transform.
    const double boosted = marsaglia_tsang(shape + 1.0, stream);
    const double u = stream.next_uniform();
    return boosted * std::pow(u, 1.0 / shape);
  }
  return marsaglia_tsang(shape, stream);
}

std::pair<double, double> sample_bivariate_uniform(
    double theta, BivariateUniformMethod method, RngStream& stream) {
  if (!(theta >= -1.0 && theta <= 1.0)) {
    throw std::domain_error(
        "sample_bivariate_uniform: requires theta in [-1, 1]");
  }
  if (method == BivariateUniformMethod::acceptance_rejection) {
    const double envelope = 1.0 + std::fabs(theta);
    for (;;) {
      const double u = stream.next_uniform();
      const double v = stream.next_uniform();
      const double accept = stream.next_uniform();
      const double density = 1.0 + theta * (1.0 - 2.0 * u) * (1.0 - 2.0 * v);
      if (accept * envelope < density) return {u, v};
    }
  }
  // Conditional inversion. Given u, the second coordinate has CDF
  // (1 + k) t - k t^2 with k = theta (1 - 2u); solving the quadratic for
  // t in [0, 1] via the conjugate root form stays stable as k -> 0.
  const double u = stream.next_uniform();
  const double w = stream.next_uniform();
  const double k = theta * (1.0 - 2.0 * u);
  double v;
  if (std::fabs(k) < 1e-12) {
    v = w;
  } else {
    const double disc = (1.0 + k) * (1.0 + k) - 4.0 * k * w;
    v = 2.0 * w / (1.0 + k + std::sqrt(disc));
  }
  return {u, v};
}

SamplePair sample_method1(const Method1Plan& plan, RngStream& stream) {
  double x1 = 0.0;
  double x2 = 0.0;
  // s uniforms, one per term of Y2's sum; the first r of them are shared
  // antithetically with Y1 (-ln u against -ln(1-u)).
  for (int i = 0; i < plan.s; ++i) {
    const double u = stream.next_uniform();
    if (i < plan.r) x1 -= std::log(u);
    x2 -= std::log1p(-u);
  }
  const double x0 = sample_gamma(plan.alpha0, stream);
  return scale_pair({x0 + x1, x0 + x2}, plan.rate);
}

SamplePair sample_method2(const Method2Plan& plan, RngStream& stream,
                          BivariateUniformMethod method) {
  double x1 = 0.0;
  double x2 = 0.0;
  for (int i = 0; i < plan.r; ++i) {
    const auto [u, v] = sample_bivariate_uniform(plan.theta, method, stream);
    x1 -= std::log(u);
    x2 -= std::log(v);
  }
  for (int i = plan.r; i < plan.s; ++i) {
    x2 -= std::log(stream.next_uniform());
  }
  const double x0 = sample_gamma(plan.alpha0, stream);
  return scale_pair({x0 + x1, x0 + x2}, plan.rate);
}

SamplePair scale_pair(SamplePair pair, double rate) {
  if (!(rate > 0.0)) throw std::domain_error("scale_pair: requires rate > 0");
  return {pair.y1 / rate, pair.y2 / rate};
}

}  // namespace gammapair
