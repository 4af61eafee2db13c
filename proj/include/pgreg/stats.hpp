#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>

namespace pgreg {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty input");
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

// Sample mean and unbiased standard deviation.
inline std::pair<double, double> mean_sd(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("mean_sd: need length >= 2");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

namespace detail {

// Regularized incomplete beta I_x(a, b) by the Lentz continued fraction,
// relative tolerance 1e-12. The symmetry I_x(a,b) = 1 - I_{1-x}(b,a) keeps
// the fraction in its fast-converging region.
inline double incomplete_beta_cf(double a, double b, double x) {
  constexpr double eps = 1e-14;
  constexpr double tiny = 1e-300;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < eps) break;
  }
  return h;
}

}  // namespace detail

inline double incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0)
    throw std::domain_error("incomplete_beta: need a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::incomplete_beta_cf(a, b, x) / a;
  return 1.0 - front * detail::incomplete_beta_cf(b, a, 1.0 - x) / b;
}

// Student-t distribution function.
inline double student_t_cdf(double t, double df) {
  if (df <= 0.0) throw std::domain_error("student_t_cdf: need df > 0");
  if (t == 0.0) return 0.5;
  const double x = df / (df + t * t);
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x);
  return t > 0.0 ? 1.0 - tail : tail;
}

struct PairedTestResult {
  double t_stat = 0.0;
  long df = 0;
  double p_value = 1.0;
  double mean_diff = 0.0;
  bool degenerate = false;  // all differences equal
};

// Two-sided paired t-test on the differences a - b.
inline PairedTestResult paired_t_test(std::span<const double> a,
                                      std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("paired_t_test: length mismatch");
  if (a.size() < 2) throw std::invalid_argument("paired_t_test: need n >= 2");
  const std::size_t n = a.size();

  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m += a[i] - b[i];
  m /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - m;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  PairedTestResult res;
  res.df = static_cast<long>(n) - 1;
  res.mean_diff = m;
  if (sd == 0.0) {
    res.degenerate = true;
    if (m == 0.0) {
      res.t_stat = 0.0;
      res.p_value = 1.0;
    } else {
      res.t_stat = m > 0.0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
      res.p_value = 0.0;
    }
    return res;
  }
  res.t_stat = m / (sd / std::sqrt(static_cast<double>(n)));
  res.p_value =
      2.0 * (1.0 - student_t_cdf(std::fabs(res.t_stat),
                                 static_cast<double>(res.df)));
  return res;
}

}  // namespace pgreg
