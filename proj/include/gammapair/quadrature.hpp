#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gammapair/errors.hpp"

namespace gammapair {

struct QuadOptions {
  // Hard cap on subdivisions before giving up with no_convergence_error.
  int max_intervals = 20000;
};

namespace quad_detail {

// 15-point Kronrod extension of 7-point Gauss, positive abscissae.
// Odd-indexed nodes (and the midpoint) are the embedded Gauss points.
inline constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodW[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGaussW[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double integral = 0.0;
  double error = 0.0;
};

// Heap orders by estimated error so the worst panel is split first.
inline bool panel_less(const Panel& x, const Panel& y) {
  return x.error < y.error;
}

template <class F>
Panel gk15(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double kronrod = kKronrodW[7] * fc;
  double gauss = kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodW[i] * pair;
    if (i % 2 == 1) gauss += kGaussW[(i - 1) / 2] * pair;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.integral = kronrod * half;
  p.error = std::fabs((kronrod - gauss) * half);
  return p;
}

}  // namespace quad_detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b] to absolute
// tolerance tol. Splitting always targets the panel with the largest error
// estimate, which copes with integrable endpoint singularities (log, inverse
// square root) that defeat fixed-depth bisection. Throws no_convergence_error
// if the panel budget runs out first.
template <class F>
double quad_1d(F&& f, double a, double b, double tol, QuadOptions opts = {}) {
  if (!(a < b)) throw std::domain_error("quad_1d: requires a < b");
  if (!(tol > 0.0)) throw std::domain_error("quad_1d: requires tol > 0");

  std::vector<quad_detail::Panel> heap;
  heap.push_back(quad_detail::gk15(f, a, b));
  double total_error = heap.front().error;

  while (total_error > tol) {
    if (static_cast<int>(heap.size()) >= opts.max_intervals) {
      throw no_convergence_error(
          "quad_1d: tolerance not reached within the interval budget");
    }
    std::pop_heap(heap.begin(), heap.end(), quad_detail::panel_less);
    const quad_detail::Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    const quad_detail::Panel left = quad_detail::gk15(f, worst.a, mid);
    const quad_detail::Panel right = quad_detail::gk15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), quad_detail::panel_less);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), quad_detail::panel_less);
  }

  long double total = 0.0L;
  for (const auto& p : heap) total += p.integral;
  return static_cast<double>(total);
}

}  // namespace gammapair
