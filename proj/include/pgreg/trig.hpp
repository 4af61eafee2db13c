#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pgreg {

// Orthonormal trigonometric basis on L2(-pi, pi].
// Index convention: l = 0 is the constant, l = 2k-1 is sin(kt), l = 2k is
// cos(kt). The frequency of index l is k = ceil(l/2).

inline constexpr std::size_t frequency(std::size_t l) noexcept {
  return (l + 1) / 2;
}

inline constexpr bool is_sine(std::size_t l) noexcept { return l % 2 == 1; }

inline double basis_eval(std::size_t l, double t) {
  static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  static const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  if (l == 0) return inv_sqrt_2pi;
  const double k = static_cast<double>(frequency(l));
  return is_sine(l) ? inv_sqrt_pi * std::sin(k * t)
                    : inv_sqrt_pi * std::cos(k * t);
}

// Fourier coefficients theta_0..theta_L of a function.
using CoefficientVector = std::vector<double>;

inline double synthesize(const CoefficientVector& coeffs, double t) {
  double acc = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l)
    acc += coeffs[l] * basis_eval(l, t);
  return acc;
}

// Equidistant analysis grid on (-pi, pi]: t_j = -pi + 2*pi*j/N, j = 1..N.
inline std::vector<double> analysis_grid(std::size_t points) {
  std::vector<double> t(points);
  for (std::size_t j = 1; j <= points; ++j)
    t[j - 1] = -std::numbers::pi +
               2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(points);
  return t;
}

// Rectangle-rule Fourier analysis of samples f(t_j) on the equidistant grid.
// Exact for trigonometric polynomials of degree <= N/2 - 1, hence the
// anti-aliasing requirement N >= 2L + 2.
inline CoefficientVector analyze(const std::vector<double>& samples,
                                 std::size_t truncation) {
  const std::size_t n = samples.size();
  if (n < 2 * truncation + 2)
    throw std::invalid_argument(
        "analyze: need at least 2L + 2 samples for truncation L");
  const std::vector<double> t = analysis_grid(n);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  CoefficientVector coeffs(truncation + 1, 0.0);
  for (std::size_t l = 0; l <= truncation; ++l) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += samples[j] * basis_eval(l, t[j]);
    coeffs[l] = h * acc;
  }
  return coeffs;
}

template <class F>
CoefficientVector analyze(F&& f, std::size_t points, std::size_t truncation) {
  const std::vector<double> t = analysis_grid(points);
  std::vector<double> samples(points);
  for (std::size_t j = 0; j < points; ++j) samples[j] = f(t[j]);
  return analyze(samples, truncation);
}

}  // namespace pgreg
