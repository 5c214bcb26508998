#pragma once

namespace gammapair {

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// Regularized lower incomplete gamma P(shape, x), i.e. the CDF at x of a
// gamma variate with the given shape and unit rate. Requires shape > 0 and
// x >= 0; result is clamped to [0, 1].
double reg_inc_gamma_p(double shape, double x);

}  // namespace gammapair
