#pragma once

#include <cmath>
#include <stdexcept>

#include "pgreg/trig.hpp"

namespace pgreg {

// Ellipsoid weight sequences rho_l over the trigonometric basis. A function
// class is the set { Sum rho_l theta_l^2 <= Q }. Sine and cosine of the same
// frequency share a weight, and rho_0 = 1 always.
//
//   sobolev(m):        rho = k^{2m} + 1        (m derivatives in L2)
//   analytic(alpha):   rho = exp(alpha k)      (analytic in a strip)
//   infinite_order(w): rho = exp(k^2 w^2 / 2)  (native space of the
//                                               periodic Gaussian kernel)
enum class EllipsoidKind { sobolev, analytic, infinite_order };

struct EllipsoidSpec {
  EllipsoidKind kind;
  double parameter;  // m, alpha, or omega
  double radius;     // Q

  static EllipsoidSpec sobolev(double m, double q) {
    if (m < 1.0) throw std::invalid_argument("sobolev: need m >= 1");
    if (q <= 0.0) throw std::invalid_argument("ellipsoid: need Q > 0");
    return {EllipsoidKind::sobolev, m, q};
  }
  static EllipsoidSpec analytic(double alpha, double q) {
    if (alpha <= 0.0) throw std::invalid_argument("analytic: need alpha > 0");
    if (q <= 0.0) throw std::invalid_argument("ellipsoid: need Q > 0");
    return {EllipsoidKind::analytic, alpha, q};
  }
  static EllipsoidSpec infinite_order(double omega, double q) {
    if (omega <= 0.0)
      throw std::invalid_argument("infinite_order: need omega > 0");
    if (q <= 0.0) throw std::invalid_argument("ellipsoid: need Q > 0");
    return {EllipsoidKind::infinite_order, omega, q};
  }
};

inline double ellipsoid_weight(const EllipsoidSpec& spec, std::size_t l) {
  if (l == 0) return 1.0;
  const double k = static_cast<double>(frequency(l));
  switch (spec.kind) {
    case EllipsoidKind::sobolev:
      return std::pow(k, 2.0 * spec.parameter) + 1.0;
    case EllipsoidKind::analytic:
      return std::exp(spec.parameter * k);
    case EllipsoidKind::infinite_order:
      return std::exp(0.5 * k * k * spec.parameter * spec.parameter);
  }
  return 1.0;  // unreachable
}

// Linear minimax filters use a_l = sqrt(rho_l).
inline double pinsker_weight(const EllipsoidSpec& spec, std::size_t l) {
  return std::sqrt(ellipsoid_weight(spec, l));
}

// Regularizer weight sequences beta_l for the penalty lambda * Sum beta_l
// theta_l^2. Same pairing convention as the ellipsoid weights; beta_0 is 1
// or 0 depending on whether the constant is penalized.
//
//   periodic_gaussian(w): beta = exp(k^2 w^2 / 2)
//   analytic(alpha):      beta = exp(alpha k)
//   spline(m):            beta = k^{2m}   (m = 2 is the cubic spline
//                                          penalty integral of f'' squared)
enum class PenaltyKind { periodic_gaussian, analytic, spline };

struct PenaltySpec {
  PenaltyKind kind;
  double parameter;  // omega, alpha, or spline order m
  bool penalize_constant;

  static PenaltySpec periodic_gaussian(double omega,
                                       bool penalize_constant = true) {
    if (omega <= 0.0)
      throw std::invalid_argument("periodic_gaussian: need omega > 0");
    return {PenaltyKind::periodic_gaussian, omega, penalize_constant};
  }
  static PenaltySpec analytic(double alpha, bool penalize_constant = true) {
    if (alpha <= 0.0) throw std::invalid_argument("analytic: need alpha > 0");
    return {PenaltyKind::analytic, alpha, penalize_constant};
  }
  static PenaltySpec spline(double order = 2.0,
                            bool penalize_constant = false) {
    if (order < 1.0) throw std::invalid_argument("spline: need order >= 1");
    return {PenaltyKind::spline, order, penalize_constant};
  }
};

inline double penalty_weight(const PenaltySpec& spec, std::size_t l) {
  if (l == 0) return spec.penalize_constant ? 1.0 : 0.0;
  const double k = static_cast<double>(frequency(l));
  switch (spec.kind) {
    case PenaltyKind::periodic_gaussian:
      return std::exp(0.5 * k * k * spec.parameter * spec.parameter);
    case PenaltyKind::analytic:
      return std::exp(spec.parameter * k);
    case PenaltyKind::spline:
      return std::pow(k, 2.0 * spec.parameter);
  }
  return 0.0;  // unreachable
}

}  // namespace pgreg
