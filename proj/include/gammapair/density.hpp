#pragma once

namespace gammapair {

// For the r = s = 1 construction the pair (Y1, Y2) determines the shared
// shock: x0 = y1 - ln(1 + exp(y1 - y2)). The support of the joint density
// is x0 > 0, i.e. y2 above this curve. Requires y1 > 0. The curve equals
// -log1p(-exp(-y1)): it blows up as y1 -> 0+ and decays like exp(-y1).
double support_boundary(double y1);

// Joint density of (Y1, Y2) = (X0 - ln U, X0 - ln(1 - U)) with U uniform
// and X0 gamma of shape alpha0, unit rate:
//   f(y1, y2) = x0^(alpha0 - 1) / (Gamma(alpha0) (e^y1 + e^y2)).
// Zero outside the support. Requires alpha0 > 0.
double joint_density_r1s1(double y1, double y2, double alpha0);

// Closed form of int_b^inf dx / (a + e^x) = (ln(a + e^b) - b) / a for
// a > 0; used as an oracle for marginal integrals of the density above.
double integral_identity(double a, double b);

}  // namespace gammapair
