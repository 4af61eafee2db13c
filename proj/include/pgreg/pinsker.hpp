#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pgreg/weights.hpp"

namespace pgreg {

// Linear minimax risk over an ellipsoid { Sum a_l^2 theta_l^2 <= Q } with
// nondecreasing weights a_l: water-filling with level mu determined by
//
//   (1/n) Sum a_l (mu - a_l)_+ = Q,
//
// after which the risk is (1/n) Sum (1 - a_l / mu)_+. Both sums stop
// exactly at the first a_l >= mu.
struct PinskerSolution {
  double mu = 0.0;
  std::size_t cutoff = 0;  // number of indices with a_l < mu
  double risk = 0.0;
};

namespace detail {

template <class Weights>
double pinsker_moment(Weights&& a, double mu, long n) {
  double acc = 0.0;
  for (std::size_t l = 0;; ++l) {
    const double al = a(l);
    if (!(al < mu)) break;
    acc += al * (mu - al);
  }
  return acc / static_cast<double>(n);
}

template <class Weights>
PinskerSolution pinsker_solve_core(Weights&& a, double q, long n) {
  if (n < 1) throw std::invalid_argument("pinsker_solve: need n >= 1");
  if (q <= 0.0) throw std::invalid_argument("pinsker_solve: need Q > 0");

  // Bracket the water level by doubling; the moment is continuous,
  // nondecreasing and unbounded in mu.
  double lo = a(0);
  double hi = 2.0 * std::max(lo, 1.0);
  while (pinsker_moment(a, hi, n) < q) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw std::runtime_error("pinsker_solve: bracket overflow");
  }
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (pinsker_moment(a, mid, n) < q)
      lo = mid;
    else
      hi = mid;
  }

  PinskerSolution sol;
  sol.mu = 0.5 * (lo + hi);
  double risk = 0.0;
  std::size_t count = 0;
  for (std::size_t l = 0;; ++l) {
    const double al = a(l);
    if (!(al < sol.mu)) break;
    risk += 1.0 - al / sol.mu;
    ++count;
  }
  sol.cutoff = count;
  sol.risk = risk / static_cast<double>(n);
  return sol;
}

}  // namespace detail

inline PinskerSolution pinsker_solve(const EllipsoidSpec& spec, long n) {
  return detail::pinsker_solve_core(
      [&spec](std::size_t l) { return pinsker_weight(spec, l); }, spec.radius,
      n);
}

// Finite-dimensional ellipsoid given by an explicit nondecreasing weight
// list; indices past the end are treated as infinitely constrained.
inline PinskerSolution pinsker_solve(const std::vector<double>& weights,
                                     double q, long n) {
  if (weights.empty())
    throw std::invalid_argument("pinsker_solve: empty weight list");
  return detail::pinsker_solve_core(
      [&weights](std::size_t l) {
        return l < weights.size() ? weights[l]
                                  : std::numeric_limits<double>::infinity();
      },
      q, n);
}

}  // namespace pgreg
