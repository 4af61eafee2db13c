#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgreg {

// Reduce an angle to (-pi, pi].
inline double wrap_angle(double r) {
  double w = std::remainder(r, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

// N(0, omega^2) density.
inline double gauss_density(double r, double omega) {
  if (omega <= 0.0) throw std::domain_error("gauss_density: need omega > 0");
  const double z = r / omega;
  return std::exp(-0.5 * z * z) /
         (std::sqrt(2.0 * std::numbers::pi) * omega);
}

// Truncation for the periodized sum: 2J + 1 >= 3 omega.
inline int wrapped_gauss_truncation(double omega) {
  return std::max(1, static_cast<int>(std::ceil((3.0 * omega - 1.0) / 2.0)));
}

// Periodized Gaussian: Sum_{k=-J}^{J} G(r - 2 pi k). With the automatic J
// the dropped tail is far below double precision.
inline double wrapped_gauss(double r, double omega, int truncation) {
  if (truncation < 1)
    throw std::invalid_argument("wrapped_gauss: need truncation >= 1");
  const double w = wrap_angle(r);
  double acc = 0.0;
  for (int k = -truncation; k <= truncation; ++k)
    acc += gauss_density(w - 2.0 * std::numbers::pi * k, omega);
  return acc;
}

inline double wrapped_gauss(double r, double omega) {
  return wrapped_gauss(r, omega, wrapped_gauss_truncation(omega));
}

// Series length making exp(-L^2 omega^2 / 2) vanish at double precision.
inline int fourier_truncation(double omega) {
  if (omega <= 0.0)
    throw std::domain_error("fourier_truncation: need omega > 0");
  return std::max(1, static_cast<int>(std::ceil(9.2 / omega)));
}

// The same kernel through its Fourier series (Poisson summation):
//   1/(2 pi) + (1/pi) Sum_{l>=1} exp(-l^2 omega^2 / 2) cos(l r).
// The constant term belongs to the periodized sum.
inline double fourier_kernel(double r, double omega, int terms) {
  if (terms < 1) throw std::invalid_argument("fourier_kernel: need terms >= 1");
  const double w = wrap_angle(r);
  double acc = 0.0;
  for (int l = terms; l >= 1; --l)
    acc += std::exp(-0.5 * l * l * omega * omega) * std::cos(l * w);
  return 0.5 / std::numbers::pi + acc / std::numbers::pi;
}

inline double fourier_kernel(double r, double omega) {
  return fourier_kernel(r, omega, fourier_truncation(omega));
}

// Kernel of the periodic cubic smoothing spline (penalty integral of f''
// squared, constant left free): (1/pi) Sum_{l=1}^{L} l^{-4} cos(l r).
// Truncation tail is below L^{-3} / (3 pi).
inline double spline_kernel(double r, int terms = 10000) {
  if (terms < 100) throw std::invalid_argument("spline_kernel: need terms >= 100");
  const double w = wrap_angle(r);
  double acc = 0.0;
  for (int l = terms; l >= 1; --l) {
    const double dl = static_cast<double>(l);
    acc += std::cos(dl * w) / (dl * dl * dl * dl);
  }
  return acc / std::numbers::pi;
}

enum class KernelKind { periodic_gaussian, plain_gaussian, periodic_spline };

struct KernelSpec {
  KernelKind kind = KernelKind::periodic_gaussian;
  double omega = 1.0;
  int truncation = 1;  // J for periodic_gaussian, series length for spline

  static KernelSpec periodic_gaussian(double omega) {
    if (omega <= 0.0)
      throw std::invalid_argument("periodic_gaussian: need omega > 0");
    return {KernelKind::periodic_gaussian, omega,
            wrapped_gauss_truncation(omega)};
  }
  static KernelSpec periodic_gaussian(double omega, int truncation) {
    KernelSpec spec = periodic_gaussian(omega);
    spec.truncation = std::max(truncation, spec.truncation);
    return spec;
  }
  static KernelSpec plain_gaussian(double omega) {
    if (omega <= 0.0)
      throw std::invalid_argument("plain_gaussian: need omega > 0");
    return {KernelKind::plain_gaussian, omega, 0};
  }
  static KernelSpec periodic_spline(int series_length = 10000) {
    if (series_length < 100)
      throw std::invalid_argument("periodic_spline: need series length >= 100");
    return {KernelKind::periodic_spline, 0.0, series_length};
  }
};

inline std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::periodic_gaussian: return "periodic_gaussian";
    case KernelKind::plain_gaussian: return "plain_gaussian";
    case KernelKind::periodic_spline: return "periodic_spline";
  }
  return "unknown";
}

// The plain Gaussian baseline is intentionally not periodized, so its
// argument is not wrapped.
inline double kernel_eval(const KernelSpec& spec, double r) {
  switch (spec.kind) {
    case KernelKind::periodic_gaussian:
      return wrapped_gauss(r, spec.omega, spec.truncation);
    case KernelKind::plain_gaussian:
      return gauss_density(r, spec.omega);
    case KernelKind::periodic_spline:
      return spline_kernel(r, spec.truncation);
  }
  return 0.0;  // unreachable
}

// n x n matrix of pairwise kernel evaluations on a design.
inline Eigen::MatrixXd gram(const std::vector<double>& design,
                            const KernelSpec& spec) {
  if (design.empty()) throw std::invalid_argument("gram: empty design");
  const Eigen::Index n = static_cast<Eigen::Index>(design.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = kernel_eval(spec, design[static_cast<std::size_t>(i)] -
                                             design[static_cast<std::size_t>(j)]);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

}  // namespace pgreg
