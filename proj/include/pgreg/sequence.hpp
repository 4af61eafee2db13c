#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pgreg/rng.hpp"
#include "pgreg/trig.hpp"

namespace pgreg {

// Observations in the Gaussian sequence model: y_l = theta_l + eps_l with
// eps_l independent N(0, 1/n). The scale n plays the role of sample size.
struct SequenceObservations {
  std::vector<double> y;
  long n = 1;
};

inline SequenceObservations sample_observations(const CoefficientVector& theta,
                                                long n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_observations: need n >= 1");
  SequenceObservations obs;
  obs.n = n;
  obs.y.resize(theta.size());
  const double sd = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t l = 0; l < theta.size(); ++l)
    obs.y[l] = theta[l] + sd * rng.normal();
  return obs;
}

}  // namespace pgreg
