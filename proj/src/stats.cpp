#include "gammapair/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gammapair {

void SummaryStats::add(double x, double y) {
  n_ += 1;
  const double dx = x - mean1_;
  const double dy = y - mean2_;
  mean1_ += dx / static_cast<double>(n_);
  mean2_ += dy / static_cast<double>(n_);
  // dx uses the old mean, (x - mean1_) the updated one; their product is
  // the standard co-moment update.
  m2_1_ += dx * (x - mean1_);
  m2_2_ += dy * (y - mean2_);
  c12_ += dx * (y - mean2_);
}

void SummaryStats::merge(const SummaryStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double nab = na + nb;
  const double d1 = other.mean1_ - mean1_;
  const double d2 = other.mean2_ - mean2_;
  m2_1_ += other.m2_1_ + d1 * d1 * na * nb / nab;
  m2_2_ += other.m2_2_ + d2 * d2 * na * nb / nab;
  c12_ += other.c12_ + d1 * d2 * na * nb / nab;
  mean1_ += d1 * nb / nab;
  mean2_ += d2 * nb / nab;
  n_ += other.n_;
}

double SummaryStats::mean1() const {
  if (n_ == 0) throw std::invalid_argument("SummaryStats: no data");
  return mean1_;
}

double SummaryStats::mean2() const {
  if (n_ == 0) throw std::invalid_argument("SummaryStats: no data");
  return mean2_;
}

double SummaryStats::var1() const {
  if (n_ < 2) throw std::invalid_argument("SummaryStats: need count >= 2");
  return m2_1_ / static_cast<double>(n_ - 1);
}

double SummaryStats::var2() const {
  if (n_ < 2) throw std::invalid_argument("SummaryStats: need count >= 2");
  return m2_2_ / static_cast<double>(n_ - 1);
}

double SummaryStats::cov() const {
  if (n_ < 2) throw std::invalid_argument("SummaryStats: need count >= 2");
  return c12_ / static_cast<double>(n_ - 1);
}

bool SummaryStats::corr_defined() const {
  return n_ >= 2 && m2_1_ > 0.0 && m2_2_ > 0.0;
}

double SummaryStats::corr() const {
  if (n_ < 2) throw std::invalid_argument("SummaryStats: need count >= 2");
  if (!corr_defined()) return std::numeric_limits<double>::quiet_NaN();
  return c12_ / std::sqrt(m2_1_ * m2_2_);
}

KsResult ks_statistic(std::span<const double> sorted,
                      const std::function<double(double)>& cdf) {
  const std::size_t n = sorted.size();
  if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && sorted[i] < sorted[i - 1]) {
      throw std::domain_error("ks_statistic: input not sorted ascending");
    }
    const double f = cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / dn - f;
    const double below = f - static_cast<double>(i) / dn;
    if (above > d) d = above;
    if (below > d) d = below;
  }
  KsResult result;
  result.statistic = d;
  result.n = n;
  result.critical_1pct = 1.6276 / std::sqrt(dn);
  return result;
}

}  // namespace gammapair
