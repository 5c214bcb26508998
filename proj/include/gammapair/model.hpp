#pragma once

namespace gammapair {

inline constexpr double kPi = 3.14159265358979323846;

// Cov(ln U, ln(1-U)) for a single uniform U: 1 - pi^2/6, about -0.64493.
// This is the floor for the whole construction: no pair produced here can
// correlate more negatively than this value.
double antithetic_log_cov();

// Rate parametrization throughout: density lambda^a x^(a-1) e^(-lambda x)
// / Gamma(a), mean a / lambda.
struct GammaParams {
  double rate = 1.0;   // lambda > 0
  double shape = 1.0;  // a > 0
};

double gamma_pdf(double x, const GammaParams& params);
double gamma_cdf(double x, const GammaParams& params);

// A request: marginal shapes m (first coordinate) and n (second), and the
// desired correlation rho0. Solvers assume m <= n; normalize_target swaps
// the shapes when needed and reports that it did.
struct TargetSpec {
  double m = 1.0;
  double n = 1.0;
  double rho0 = -0.5;
};

struct NormalizedTarget {
  TargetSpec spec;
  bool swapped = false;
};

// Validates m > 0, n > 0, -1 < rho0 < 0; swaps m and n so that m <= n.
// Throws std::domain_error on invalid input.
NormalizedTarget normalize_target(double m, double n, double rho0);

// Method 1: Y1 = X0 + sum of r unit exponentials -ln(U_i), Y2 = X0 + sum of
// s terms -ln(1-U_i), sharing the first r uniforms, plus a common gamma
// shock X0 with shape alpha0. Marginals are gamma with shapes alpha0+r and
// alpha0+s.
struct Method1Plan {
  int r = 1;
  int s = 1;
  double alpha0 = 0.0;
  double rate = 1.0;
  double rho_theoretical = 0.0;
};

// Method 2: the r coupled pairs come from a bivariate uniform density
// 1 + theta (1-2u)(1-2v) instead of the antithetic coupling.
struct Method2Plan {
  int r = 1;
  int s = 1;
  double alpha0 = 0.0;
  double theta = 0.0;
  double rate = 1.0;
  double rho_theoretical = 0.0;
};

// Factories validate 1 <= r <= s, alpha0 >= 0, rate > 0 (and |theta| <= 1)
// and fill rho_theoretical from the closed forms below. rho_theoretical is
// rate-invariant: correlation survives the common rescale by 1/rate.
Method1Plan make_method1_plan(int r, int s, double alpha0, double rate = 1.0);
Method2Plan make_method2_plan(int r, int s, double alpha0, double theta,
                              double rate = 1.0);

// Corr(Y1, Y2) = (alpha0 + r c) / sqrt((alpha0 + r)(alpha0 + s)) with
// c = antithetic_log_cov(). Requires alpha0 >= 0, 1 <= r <= s.
double rho_method1(double alpha0, int r, int s);

// Most negative value method 1 attains for given r <= s: alpha0 = 0, i.e.
// c sqrt(r / s). Shares the rho_method1 code path so attainment is exact.
double rho_method1_lower_bound(int r, int s);

// Corr(Y1, Y2) = (alpha0 + r theta / 4) / sqrt((alpha0 + r)(alpha0 + s)).
// Requires alpha0 >= 0, 1 <= r <= s, -1 <= theta <= 1.
double rho_method2(double alpha0, int r, int s, double theta);

// Most negative correlation method 2 attains with integer shapes m <= n:
// -(m - 5) / (4 sqrt(m n)), from theta = -1, r = m - 1. Requires m >= 6.
double rho_method2_lower_bound(double m, double n);

// Moments of the bivariate uniform family: Corr(U, V) = theta / 3 and
// Cov(ln U, ln V) = theta / 4.
double uniform_pair_corr(double theta);
double uniform_pair_log_cov(double theta);

}  // namespace gammapair
