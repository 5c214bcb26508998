#pragma once

#include <stdexcept>

namespace gammapair {

// Requested target lies outside what the method can attain for the given
// marginal shapes. The message names the attainable bound.
struct infeasible_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Method-1 exact mode only: the target would need a non-integer number of
// coupled exponential terms.
struct not_representable_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Adaptive quadrature ran out of subdivision budget before reaching the
// requested tolerance.
struct no_convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gammapair
