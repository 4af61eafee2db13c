#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <pgreg/experiments.hpp>
#include <pgreg/regression.hpp>
#include <pgreg/rng.hpp>
#include <pgreg/shrinkage.hpp>
#include <pgreg/test_functions.hpp>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

pgreg::RegressionData noisy_data(pgreg::TestFunctionId id, int n,
                                 pgreg::DesignKind design, std::uint64_t seed,
                                 double sd = 1.0) {
  pgreg::RngStream dstream(seed, 0);
  pgreg::RegressionData data;
  data.x = pgreg::make_design(design, n, dstream);
  data.y.resize(data.x.size());
  pgreg::RngStream nstream(seed, 1);
  for (std::size_t j = 0; j < data.x.size(); ++j)
    data.y[j] = pgreg::eval_test_function(id, data.x[j]) + sd * nstream.normal();
  return data;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("penalized fit matches the dense solve") {
  const auto data = noisy_data(pgreg::TestFunctionId::f1, 100,
                               pgreg::DesignKind::equidistant, 101);
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);
  const double lambda = 0.1;
  const auto fit = pgreg::fit_penalized(data, spec, lambda);

  const Eigen::MatrixXd k = pgreg::gram(data.x, spec);
  const Eigen::VectorXd y =
      Eigen::Map<const Eigen::VectorXd>(data.y.data(), 100);
  const Eigen::MatrixXd reg =
      k + lambda * Eigen::MatrixXd::Identity(100, 100);
  const Eigen::VectorXd c = reg.ldlt().solve(y);
  const Eigen::VectorXd fitted = k * c;

  for (int i = 0; i < 100; ++i) {
    REQUIRE_THAT(fit.coefficients[i], WithinAbs(c[i], 1e-10));
    REQUIRE_THAT(fit.fitted[i], WithinAbs(fitted[i], 1e-10));
  }
  REQUIRE(fit.intercept == 0.0);
  REQUIRE_THAT(fit.smoother_trace,
               WithinAbs((reg.inverse() * k).trace(), 1e-8));
}

TEST_CASE("unpenalized-constant fit solves the augmented system") {
  for (auto design : {pgreg::DesignKind::equidistant,
                      pgreg::DesignKind::nonequidistant}) {
    const int n = 60;
    const auto data = noisy_data(pgreg::TestFunctionId::f3, n, design, 7);
    const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);
    const double lambda = 0.1;
    const auto fit = pgreg::fit_unpenalized_constant(data, spec, lambda);

    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
    aug.topLeftCorner(n, n) =
        pgreg::gram(data.x, spec) + lambda * Eigen::MatrixXd::Identity(n, n);
    aug.topRightCorner(n, 1).setOnes();
    aug.bottomLeftCorner(1, n).setOnes();
    Eigen::VectorXd rhs(n + 1);
    rhs.head(n) = Eigen::Map<const Eigen::VectorXd>(data.y.data(), n);
    rhs[n] = 0.0;
    const Eigen::VectorXd sol = aug.fullPivLu().solve(rhs);

    for (int i = 0; i < n; ++i)
      REQUIRE_THAT(fit.coefficients[i], WithinAbs(sol[i], 1e-10));
    REQUIRE_THAT(fit.intercept, WithinAbs(sol[n], 1e-10));
    const Eigen::VectorXd fitted =
        pgreg::gram(data.x, spec) * sol.head(n) +
        sol[n] * Eigen::VectorXd::Ones(n);
    for (int i = 0; i < n; ++i)
      REQUIRE_THAT(fit.fitted[i], WithinAbs(fitted[i], 1e-10));
    // The coefficients are orthogonal to the constant.
    double csum = 0.0;
    for (double ci : fit.coefficients) csum += ci;
    REQUIRE_THAT(csum, WithinAbs(0.0, 1e-10));
  }
}

TEST_CASE("equidistant unpenalized-constant equals the filter trick") {
  // On an equidistant design the all-ones vector is an eigenvector, so the
  // augmented system reduces to forcing that direction's filter entry to 1.
  const int n = 100;
  const auto data = noisy_data(pgreg::TestFunctionId::f2, n,
                               pgreg::DesignKind::equidistant, 13);
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);
  const double lambda = 0.1;
  const auto fit = pgreg::fit_unpenalized_constant(data, spec, lambda);

  const Eigen::MatrixXd k = pgreg::gram(data.x, spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  const Eigen::VectorXd y =
      Eigen::Map<const Eigen::VectorXd>(data.y.data(), n);
  const Eigen::VectorXd w =
      es.eigenvectors().transpose() * Eigen::VectorXd::Ones(n);
  Eigen::VectorXd filter(n);
  double trace = 0.0;
  for (int i = 0; i < n; ++i) {
    // |w_i| = sqrt(n) flags the constant direction.
    if (std::abs(std::abs(w[i]) - std::sqrt(double(n))) < 1e-6)
      filter[i] = 1.0;
    else
      filter[i] = es.eigenvalues()[i] / (es.eigenvalues()[i] + lambda);
    trace += filter[i];
  }
  const Eigen::VectorXd fitted =
      es.eigenvectors() *
      (filter.array() * (es.eigenvectors().transpose() * y).array()).matrix();
  for (int i = 0; i < n; ++i)
    REQUIRE_THAT(fit.fitted[i], WithinAbs(fitted[i], 1e-10));
  REQUIRE_THAT(fit.smoother_trace, WithinAbs(trace, 1e-8));
}

TEST_CASE("constant data is reproduced by the free constant") {
  pgreg::RngStream rng(3, 0);
  pgreg::RegressionData data;
  data.x = pgreg::make_design(pgreg::DesignKind::nonequidistant, 24, rng);
  data.y.assign(24, 4.25);
  const auto fit = pgreg::fit_unpenalized_constant(
      data, pgreg::KernelSpec::periodic_gaussian(0.8), 0.3);
  REQUIRE_THAT(fit.intercept, WithinAbs(4.25, 1e-10));
  for (double c : fit.coefficients) REQUIRE_THAT(c, WithinAbs(0.0, 1e-10));
  for (double f : fit.fitted) REQUIRE_THAT(f, WithinAbs(4.25, 1e-10));
}

TEST_CASE("interpolation and total-shrinkage limits") {
  SECTION("tiny lambda interpolates") {
    const auto data = noisy_data(pgreg::TestFunctionId::f3, 8,
                                 pgreg::DesignKind::equidistant, 5, 0.2);
    const auto fit = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 1e-10);
    REQUIRE(max_abs_diff(fit.fitted, data.y) < 1e-4);
  }
  SECTION("huge lambda kills the penalized fit") {
    const auto data = noisy_data(pgreg::TestFunctionId::f4, 40,
                                 pgreg::DesignKind::equidistant, 5);
    const auto fit = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 1e12);
    double ymax = 0.0;
    for (double v : data.y) ymax = std::max(ymax, std::abs(v));
    for (double v : fit.fitted) REQUIRE(std::abs(v) < 1e-6 * ymax);
  }
  SECTION("huge lambda leaves only the mean for the free constant") {
    const auto data = noisy_data(pgreg::TestFunctionId::f4, 40,
                                 pgreg::DesignKind::equidistant, 5);
    double mean = 0.0;
    for (double v : data.y) mean += v;
    mean /= 40.0;
    const auto fit = pgreg::fit_unpenalized_constant(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 1e12);
    for (double v : fit.fitted) REQUIRE_THAT(v, WithinAbs(mean, 1e-6));
  }
}

TEST_CASE("cp limits and consistency") {
  const auto data = noisy_data(pgreg::TestFunctionId::f1, 8,
                               pgreg::DesignKind::equidistant, 17);
  SECTION("interpolating fit scores two sigma squared") {
    const auto fit = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 1e-10);
    REQUIRE_THAT(fit.cp, WithinAbs(2.0, 1e-5));
    REQUIRE_THAT(pgreg::cp_score(fit, data, 3.0), WithinAbs(6.0, 1e-4));
  }
  SECTION("fully shrunk fit scores the raw energy") {
    const auto fit = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 1e12);
    double energy = 0.0;
    for (double v : data.y) energy += v * v;
    REQUIRE_THAT(fit.cp, WithinRel(energy / 8.0, 1e-8));
  }
  SECTION("cp field equals cp_score at unit variance") {
    const auto fit = pgreg::fit_unpenalized_constant(
        data, pgreg::KernelSpec::periodic_gaussian(1.0), 0.05);
    REQUIRE_THAT(fit.cp, WithinRel(pgreg::cp_score(fit, data, 1.0), 1e-14));
    const double rss_term = fit.cp - 2.0 * fit.smoother_trace / 8.0;
    REQUIRE_THAT(pgreg::cp_score(fit, data, 2.0),
                 WithinRel(rss_term + 4.0 * fit.smoother_trace / 8.0, 1e-12));
  }
}

TEST_CASE("equidistant fits equal the circulant Fourier filter") {
  const int n = 16;
  const auto data = noisy_data(pgreg::TestFunctionId::f2, n,
                               pgreg::DesignKind::equidistant, 23);
  const auto spec = pgreg::KernelSpec::periodic_gaussian(0.9);
  const double lambda = 0.37;
  const Eigen::MatrixXd k = pgreg::gram(data.x, spec);

  using cd = std::complex<double>;
  const cd i2pi(0.0, 2.0 * kPi / n);
  // DFT eigenvalues of the circulant Gram matrix from its first row.
  std::vector<cd> d(n), yf(n);
  for (int f = 0; f < n; ++f) {
    cd dacc(0.0, 0.0), yacc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const cd phase = std::exp(-i2pi * cd(double(f * j), 0.0));
      dacc += k(0, j) * phase;
      yacc += data.y[j] * phase;
    }
    d[f] = dacc;
    yf[f] = yacc;
  }
  auto apply_filter = [&](auto&& filter) {
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) {
      cd acc(0.0, 0.0);
      for (int f = 0; f < n; ++f)
        acc += filter(f) * yf[f] * std::exp(i2pi * cd(double(f * j), 0.0));
      out[j] = acc.real() / n;
    }
    return out;
  };

  SECTION("penalized filter d/(d+lambda)") {
    const auto fit = pgreg::fit_penalized(data, spec, lambda);
    const auto fitted = apply_filter(
        [&](int f) { return d[f].real() / (d[f].real() + lambda); });
    REQUIRE(max_abs_diff(fit.fitted, fitted) < 1e-10);
  }
  SECTION("unpenalized constant forces the zero-frequency entry to one") {
    const auto fit = pgreg::fit_unpenalized_constant(data, spec, lambda);
    const auto fitted = apply_filter([&](int f) {
      return f == 0 ? 1.0 : d[f].real() / (d[f].real() + lambda);
    });
    REQUIRE(max_abs_diff(fit.fitted, fitted) < 1e-10);
  }
}

TEST_CASE("fitted values are linear in y") {
  pgreg::RngStream rng(9, 0);
  pgreg::RegressionData d1, d2, dsum;
  d1.x = pgreg::make_design(pgreg::DesignKind::nonequidistant, 30, rng);
  d2.x = dsum.x = d1.x;
  const double alpha = -1.7;
  for (int j = 0; j < 30; ++j) {
    d1.y.push_back(rng.normal());
    d2.y.push_back(rng.normal());
    dsum.y.push_back(alpha * d1.y.back() + d2.y.back());
  }
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.1);
  for (auto variant :
       {pgreg::FitVariant::penalized, pgreg::FitVariant::unpenalized_constant}) {
    pgreg::KernelEigen eigen(d1.x, spec);
    const auto f1 = eigen.fit(d1, 0.2, variant);
    const auto f2 = eigen.fit(d2, 0.2, variant);
    const auto fs = eigen.fit(dsum, 0.2, variant);
    for (int j = 0; j < 30; ++j)
      REQUIRE_THAT(fs.fitted[j],
                   WithinAbs(alpha * f1.fitted[j] + f2.fitted[j], 1e-10));
  }
}

TEST_CASE("smoother spectrum stays in the unit interval") {
  const int n = 30;
  pgreg::RngStream rng(21, 0);
  const auto x = pgreg::make_design(pgreg::DesignKind::equidistant, n, rng);
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);
  pgreg::KernelEigen eigen(x, spec);

  auto smoother = [&](pgreg::FitVariant variant) {
    Eigen::MatrixXd s(n, n);
    for (int j = 0; j < n; ++j) {
      pgreg::RegressionData basis;
      basis.x = x;
      basis.y.assign(n, 0.0);
      basis.y[j] = 1.0;
      const auto fit = eigen.fit(basis, 0.5, variant);
      for (int i = 0; i < n; ++i) s(i, j) = fit.fitted[i];
    }
    return s;
  };

  SECTION("penalized") {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        smoother(pgreg::FitVariant::penalized));
    REQUIRE(es.eigenvalues().minCoeff() >= -1e-12);
    REQUIRE(es.eigenvalues().maxCoeff() < 1.0);
  }
  SECTION("unpenalized constant has exactly one unit eigenvalue") {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        smoother(pgreg::FitVariant::unpenalized_constant));
    const auto& ev = es.eigenvalues();
    REQUIRE(ev.minCoeff() >= -1e-12);
    REQUIRE_THAT(ev[n - 1], WithinAbs(1.0, 1e-12));
    REQUIRE(ev[n - 2] < 1.0);
  }
}

TEST_CASE("smoother trace decreases in lambda") {
  const auto data = noisy_data(pgreg::TestFunctionId::f1, 50,
                               pgreg::DesignKind::nonequidistant, 31);
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);
  pgreg::KernelEigen eigen(data.x, spec);
  double prev = std::numeric_limits<double>::infinity();
  for (double lambda : {1e-6, 1e-4, 1e-2, 1.0, 100.0}) {
    const double trace =
        eigen.fit(data, lambda, pgreg::FitVariant::penalized).smoother_trace;
    REQUIRE(trace < prev);
    REQUIRE(trace >= 0.0);
    REQUIRE(trace <= 50.0);
    prev = trace;
  }
}

TEST_CASE("predict is consistent with the fit") {
  SECTION("prediction at design points equals fitted values") {
    for (auto kind : {pgreg::KernelKind::periodic_gaussian,
                      pgreg::KernelKind::periodic_spline}) {
      const auto data = noisy_data(pgreg::TestFunctionId::f3, 40,
                                   pgreg::DesignKind::nonequidistant, 11);
      const auto spec = kind == pgreg::KernelKind::periodic_gaussian
                            ? pgreg::KernelSpec::periodic_gaussian(1.0)
                            : pgreg::KernelSpec::periodic_spline();
      const auto fit = pgreg::fit_unpenalized_constant(data, spec, 0.05);
      for (std::size_t j = 0; j < data.x.size(); ++j)
        REQUIRE_THAT(pgreg::predict(fit, data.x[j]),
                     WithinAbs(fit.fitted[j], 1e-12));
    }
  }
  SECTION("zero coefficients return the intercept") {
    pgreg::FitResult fit;
    fit.design = {-1.0, 0.0, 1.0};
    fit.coefficients = {0.0, 0.0, 0.0};
    fit.intercept = 3.5;
    fit.spec = pgreg::KernelSpec::periodic_gaussian(1.0);
    for (double x : {-3.0, 0.0, 0.123, 2.9})
      REQUIRE(pgreg::predict(fit, x) == 3.5);
  }
  SECTION("off-design predictions track the truth in a seeded run") {
    const auto data = noisy_data(pgreg::TestFunctionId::f3, 100,
                                 pgreg::DesignKind::equidistant, 77, 0.3);
    const auto tuned = pgreg::tune_fit(
        data, pgreg::KernelKind::periodic_gaussian,
        pgreg::default_lambda_grid(), pgreg::table1_omega_grid(),
        pgreg::FitVariant::penalized);
    std::vector<double> truth(data.x.size());
    for (std::size_t j = 0; j < data.x.size(); ++j)
      truth[j] = pgreg::eval_test_function(pgreg::TestFunctionId::f3, data.x[j]);
    const double ase = pgreg::average_squared_error(tuned.fit, truth);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = -kPi + 2.0 * kPi * (i + 1) / 1000.0;
      const double err = std::abs(
          pgreg::predict(tuned.fit, x) -
          pgreg::eval_test_function(pgreg::TestFunctionId::f3, x));
      worst = std::max(worst, err);
    }
    REQUIRE(worst <= 3.0 * std::sqrt(ase));
  }
}

TEST_CASE("average squared error") {
  std::vector<double> truth{1.0, -2.0, 0.5, 3.0};
  REQUIRE(pgreg::average_squared_error(truth, truth) == 0.0);
  std::vector<double> shifted{2.0, -1.0, 1.5, 4.0};
  REQUIRE_THAT(pgreg::average_squared_error(shifted, truth),
               WithinRel(1.0, 1e-15));

  SECTION("matches an independent loop on a seeded fit") {
    const auto data = noisy_data(pgreg::TestFunctionId::f1, 50,
                                 pgreg::DesignKind::equidistant, 19);
    const auto fit = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(0.8), 0.05);
    std::vector<double> truth_vals(data.x.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < data.x.size(); ++j) {
      truth_vals[j] =
          pgreg::eval_test_function(pgreg::TestFunctionId::f1, data.x[j]);
      const double d = fit.fitted[j] - truth_vals[j];
      acc += d * d;
    }
    acc /= double(data.x.size());
    REQUIRE_THAT(pgreg::average_squared_error(fit, truth_vals),
                 WithinRel(acc, 1e-15));
    REQUIRE_THAT(pgreg::average_squared_error(fit,
                                              [](double x) {
                                                return pgreg::eval_test_function(
                                                    pgreg::TestFunctionId::f1, x);
                                              }),
                 WithinRel(acc, 1e-15));
  }
  SECTION("length mismatch is rejected") {
    REQUIRE_THROWS_AS(pgreg::average_squared_error(truth, {1.0}),
                      std::invalid_argument);
  }
}

TEST_CASE("tune_fit scans the grid") {
  SECTION("singleton grids return that fit") {
    const auto data = noisy_data(pgreg::TestFunctionId::f2, 30,
                                 pgreg::DesignKind::equidistant, 3);
    const auto tuned = pgreg::tune_fit(data, pgreg::KernelKind::periodic_gaussian,
                                       {0.25}, {1.3},
                                       pgreg::FitVariant::penalized);
    REQUIRE(tuned.lambda_star == 0.25);
    REQUIRE(tuned.omega_star == 1.3);
    const auto direct = pgreg::fit_penalized(
        data, pgreg::KernelSpec::periodic_gaussian(1.3), 0.25);
    REQUIRE(max_abs_diff(tuned.fit.fitted, direct.fitted) < 1e-14);
    REQUIRE_THAT(tuned.cp_star, WithinRel(direct.cp, 1e-12));
  }
  SECTION("spline kernel needs no omega grid") {
    const auto data = noisy_data(pgreg::TestFunctionId::f1, 30,
                                 pgreg::DesignKind::equidistant, 3);
    const auto tuned = pgreg::tune_fit(data, pgreg::KernelKind::periodic_spline,
                                       {0.1, 1.0}, {},
                                       pgreg::FitVariant::unpenalized_constant);
    REQUIRE(tuned.omega_star == 0.0);
    REQUIRE((tuned.lambda_star == 0.1 || tuned.lambda_star == 1.0));
  }
  SECTION("empty grids are rejected") {
    const auto data = noisy_data(pgreg::TestFunctionId::f1, 10,
                                 pgreg::DesignKind::equidistant, 3);
    REQUIRE_THROWS_AS(
        pgreg::tune_fit(data, pgreg::KernelKind::periodic_gaussian, {}, {1.0},
                        pgreg::FitVariant::penalized),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        pgreg::tune_fit(data, pgreg::KernelKind::periodic_gaussian, {0.1}, {},
                        pgreg::FitVariant::penalized),
        std::invalid_argument);
  }
}

// Pure noise has nothing to fit, so C_p should favor heavy smoothing. The
// tail of the C_p curve in lambda is itself a noisy near-coin-flip, so the
// sharp statement that holds is "top half of the grid", not "top decile";
// at 100 seeded trials the top-half rate is ~95%.
TEST_CASE("pure noise drives the tuned lambda high") {
  const int trials = 100;
  std::vector<double> lgrid(50);
  for (int i = 0; i < 50; ++i)  // log-spaced over [1e-4, 1e4]
    lgrid[i] = std::pow(10.0, -4.0 + 8.0 * i / 49.0);
  int top_half = 0;
  for (int t = 0; t < trials; ++t) {
    pgreg::RngStream rng(40000 + t, 1);
    pgreg::RegressionData data;
    pgreg::RngStream dstream(40000 + t, 0);
    data.x = pgreg::make_design(pgreg::DesignKind::equidistant, 100, dstream);
    data.y.resize(100);
    for (auto& v : data.y) v = rng.normal();
    const auto tuned =
        pgreg::tune_fit(data, pgreg::KernelKind::periodic_gaussian, lgrid,
                        {1.0}, pgreg::FitVariant::penalized);
    const auto pos = std::find(lgrid.begin(), lgrid.end(), tuned.lambda_star) -
                     lgrid.begin();
    if (pos >= 25) ++top_half;
  }
  CAPTURE(top_half);
  REQUIRE(top_half >= 90);
}

// C_p tracks the exact averaged squared error only loosely on a fine grid:
// neighboring lambda values differ by noise-level C_p increments, so the two
// argmins routinely sit several grid steps apart even though the selected
// risk is close. The calibrated statement: within five steps in a solid
// majority of runs.
TEST_CASE("cp argmin sits near the ase argmin") {
  const int trials = 100;
  const auto lgrid = pgreg::table1_lambda_grid();
  const auto spec = pgreg::KernelSpec::periodic_gaussian(1.0);

  int close = 0;
  for (int t = 0; t < trials; ++t) {
    pgreg::RngStream dstream(50000 + t, 0);
    pgreg::RegressionData data;
    data.x = pgreg::make_design(pgreg::DesignKind::equidistant, 100, dstream);
    data.y.resize(100);
    Eigen::VectorXd truth(100);
    pgreg::RngStream nstream(50000 + t, 1);
    for (int j = 0; j < 100; ++j) {
      truth[j] = pgreg::eval_test_function(pgreg::TestFunctionId::f1, data.x[j]);
      data.y[j] = truth[j] + nstream.normal();
    }
    pgreg::KernelEigen eigen(data.x, spec);
    const Eigen::VectorXd y_spec = eigen.to_spectral(
        Eigen::Map<const Eigen::VectorXd>(data.y.data(), 100));
    const Eigen::VectorXd truth_spec = eigen.to_spectral(truth);
    int cp_arg = 0, ase_arg = 0;
    double best_cp = std::numeric_limits<double>::infinity();
    double best_ase = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lgrid.size(); ++i) {
      const double cp =
          eigen.cp_path(y_spec, lgrid[i], pgreg::FitVariant::penalized).cp;
      const double ase =
          eigen.ase_path(y_spec, truth_spec, lgrid[i],
                         pgreg::FitVariant::penalized);
      if (cp < best_cp) {
        best_cp = cp;
        cp_arg = static_cast<int>(i);
      }
      if (ase < best_ase) {
        best_ase = ase;
        ase_arg = static_cast<int>(i);
      }
    }
    if (std::abs(cp_arg - ase_arg) <= 5) ++close;
  }
  CAPTURE(close);
  REQUIRE(close >= 55);
}

TEST_CASE("input validation") {
  pgreg::RegressionData bad;
  bad.x = {0.0, 1.0};
  bad.y = {1.0};
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.y = {1.0, std::numeric_limits<double>::quiet_NaN()};
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
  pgreg::RegressionData tiny;
  tiny.x = {0.0};
  tiny.y = {1.0};
  REQUIRE_THROWS_AS(tiny.validate(), std::invalid_argument);

  pgreg::RegressionData ok;
  ok.x = {0.0, 1.0, 2.0};
  ok.y = {1.0, 2.0, 3.0};
  REQUIRE_THROWS_AS(
      pgreg::fit_penalized(ok, pgreg::KernelSpec::periodic_gaussian(1.0), 0.0),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      pgreg::fit_penalized(ok, pgreg::KernelSpec::periodic_gaussian(1.0), -1.0),
      std::invalid_argument);

  SECTION("duplicate design points are regularized by lambda") {
    pgreg::RegressionData dup;
    dup.x = {0.5, 0.5, -1.0, 2.0};
    dup.y = {1.0, 1.2, 0.0, -1.0};
    const auto fit = pgreg::fit_penalized(
        dup, pgreg::KernelSpec::periodic_gaussian(1.0), 0.1);
    for (double v : fit.fitted) REQUIRE(std::isfinite(v));
  }
}
