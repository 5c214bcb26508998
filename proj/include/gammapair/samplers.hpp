#pragma once

#include <utility>

#include "gammapair/model.hpp"
#include "gammapair/rng.hpp"

namespace gammapair {

struct SamplePair {
  double y1 = 0.0;
  double y2 = 0.0;
};

enum class BivariateUniformMethod {
  // Invert the conditional CDF of the second coordinate; exactly two
  // uniforms per pair.
  conditional_inversion,
  // Rejection under the constant envelope 1 + |theta|; three uniforms per
  // proposal, acceptance probability 1 / (1 + |theta|).
  acceptance_rejection,
};

// Gamma variate with the given shape and unit rate. shape = 0 returns
// exactly 0 and consumes no draws. Integer shapes sum -ln(U) terms (one
// draw each); non-integer shapes use the Marsaglia-Tsang rejection method
// with Box-Muller normals, so their draw count is variable.
double sample_gamma(double shape, RngStream& stream);

// One pair from the density 1 + theta (1-2u)(1-2v) on the unit square,
// theta in [-1, 1]. theta = 0 degenerates to two independent uniforms
// under either method.
std::pair<double, double> sample_bivariate_uniform(double theta,
                                                   BivariateUniformMethod method,
                                                   RngStream& stream);

// One pair per the plan. Draw order is part of the contract:
// method 1 takes the s shared/antithetic uniforms first (the first r feed
// both coordinates), then the shock's draws; method 2 takes its r coupled
// pairs first, then s - r independent uniforms for the tail of Y2, then
// the shock's draws. With integer alpha0 that totals s + alpha0 draws for
// method 1 and 2r + (s - r) + alpha0 for method 2 (inversion coupling).
SamplePair sample_method1(const Method1Plan& plan, RngStream& stream);
SamplePair sample_method2(const Method2Plan& plan, RngStream& stream,
                          BivariateUniformMethod method =
                              BivariateUniformMethod::conditional_inversion);

// Rescales both coordinates by 1 / rate, taking unit-rate output to the
// requested rate. Correlation is unchanged.
SamplePair scale_pair(SamplePair pair, double rate);

}  // namespace gammapair
