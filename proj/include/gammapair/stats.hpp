#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace gammapair {

// Streaming bivariate moments. Single-pass Welford updates; two partial
// accumulators can be merged, so batches may be sharded and combined
// without a second pass over the data.
class SummaryStats {
 public:
  void add(double x, double y);
  void merge(const SummaryStats& other);

  std::uint64_t count() const { return n_; }
  double mean1() const;
  double mean2() const;
  // Unbiased (n-1 denominator); require count() >= 2.
  double var1() const;
  double var2() const;
  double cov() const;
  // Pearson correlation; NaN when either variance vanishes.
  double corr() const;
  bool corr_defined() const;

 private:
  std::uint64_t n_ = 0;
  double mean1_ = 0.0;
  double mean2_ = 0.0;
  double m2_1_ = 0.0;
  double m2_2_ = 0.0;
  double c12_ = 0.0;
};

struct KsResult {
  double statistic = 0.0;
  std::uint64_t n = 0;
  // Asymptotic 1% critical value, 1.6276 / sqrt(n).
  double critical_1pct = 0.0;
};

// One-sample Kolmogorov-Smirnov statistic of `sorted` (ascending) against
// the continuous CDF `cdf`. Throws std::invalid_argument on empty input and
// std::domain_error if the data is not sorted.
KsResult ks_statistic(std::span<const double> sorted,
                      const std::function<double(double)>& cdf);

}  // namespace gammapair
