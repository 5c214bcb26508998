#pragma once

#include <string>
#include <vector>

#include "gammapair/model.hpp"

namespace gammapair {

enum class Method { m1 = 1, m2 = 2 };

enum class SolveMode {
  // Return a plan only if some integer r reproduces rho0 (up to the noise
  // a rounded-input rho0 carries); otherwise not_representable_error.
  exact,
  // Return the plan whose correlation is closest to rho0, ties to the
  // smaller r.
  nearest,
};

struct FeasibilityReport {
  Method method = Method::m1;
  double m = 0.0;
  double n = 0.0;
  // Attainable correlations lie in [rho_min, rho_max]; for method 1 the
  // set is discrete (one value per admissible r) and rho_min may equal
  // rho_max when only one r fits.
  double rho_min = 0.0;
  double rho_max = 0.0;
  std::string notes;
};

struct TableRow {
  int r = 0;
  int m = 0;
  int n = 0;
  double rho = 0.0;
};

// Method 1 solver. Requires integral n - m (so that s = n - m + r is an
// integer); r must satisfy r <= m < r (1 - c) for the shock shape
// alpha0 = m - r to be nonnegative and the correlation negative. Throws
// infeasible_error when no admissible r exists or rho0 is below the
// attainable floor, not_representable_error in exact mode when no integer
// r matches.
Method1Plan solve_method1(const TargetSpec& target, SolveMode mode);

// Method 2 solver. Requires integer m >= 6 and integer n >= m; any rho0 in
// [rho_method2_lower_bound(m, n), 0) is attainable exactly, and the
// returned plan reproduces it to floating-point accuracy. Throws
// infeasible_error outside that range.
Method2Plan solve_method2(const TargetSpec& target);

// Attainable correlation range for the given shapes, without picking a
// target. Throws infeasible_error when the method admits no negative
// correlation at all for (m, n).
FeasibilityReport feasibility(Method method, double m, double n);

// The bundled catalogue of method-1 correlations: 60 (r, m, n) triples
// spanning m from 2 to 19, with rho evaluated at full precision.
std::vector<TableRow> reference_table();

}  // namespace gammapair
