#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "riesz/analysis.hpp"

using namespace riesz;

namespace {

FractionalOrder order(double two_alpha) { return FractionalOrder::from_two_alpha(two_alpha); }

const std::vector<int> kDyadic{32, 64, 128, 256, 512};

}  // namespace

TEST_CASE("weyl_ratios") {
  const EigenSolution laplace = solve(order(2.0), 64);
  const std::vector<double> rho = weyl_ratios(laplace);
  REQUIRE(rho.size() == 65);
  CHECK(std::fabs(rho[0] - 1.0) <= 1e-9);
  for (int n = 1; n <= expected_reliable_count(64); ++n) CHECK(std::fabs(rho[n - 1] - 1.0) <= 1e-2);

  for (double t : {1.2, 1.4, 1.6, 1.8, 2.0}) {
    const EigenSolution sol = solve(order(t), 128);
    const std::vector<double> r = weyl_ratios(sol);
    for (int n = 1; n <= expected_reliable_count(128); ++n) {
      CHECK(r[n - 1] >= 0.5 - 0.02);
      CHECK(r[n - 1] <= 1.0 + 0.05);
    }
  }
}

TEST_CASE("condition_number") {
  CHECK(condition_number(solve(order(1.3), 0)) == 1.0);
  double previous = 0.0;
  for (int n : {1, 2, 4, 8, 16, 32, 64}) {
    const double chi = condition_number(solve(order(1.7), n));
    CHECK(chi >= 1.0);
    CHECK(chi >= previous);
    previous = chi;
  }
  // chi_N = O(N^4) for the Laplacian: chi_N / N^4 stays in a narrow band
  std::vector<double> scaled;
  for (int n : {64, 128, 256, 512}) scaled.push_back(condition_number(solve(order(2.0), n)) / std::pow(n, 4.0));
  CHECK(*std::max_element(scaled.begin(), scaled.end()) <= 10.0 * *std::min_element(scaled.begin(), scaled.end()));
}

TEST_CASE("condition_slope") {
  CHECK(std::fabs(condition_slope(order(1.2), kDyadic) - 2.4) <= 0.3);
  CHECK(std::fabs(condition_slope(order(1.8), kDyadic) - 3.6) <= 0.3);
  CHECK(std::fabs(condition_slope(order(2.0), kDyadic) - 4.0) <= 0.3);
  CHECK_THROWS_AS(condition_slope(order(2.0), std::vector<int>{8, 16}), std::invalid_argument);
}

TEST_CASE("least_squares_slope") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  CHECK(least_squares_slope(x, y) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(least_squares_slope(std::vector<double>{1, 1}, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST_CASE("convergence_table") {
  const std::vector<int> ns{8, 16, 32, 64, 128};
  for (double t : {1.3, 1.6, 0.4}) {
    CAPTURE(t);
    const ConvergenceTable table = convergence_table(order(t), ns, 200);
    REQUIRE(table.rows.size() == ns.size());
    bool plateau = false;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
      CHECK(table.rows[k].n == ns[k]);
      CHECK(table.rows[k].error >= 0.0);
      if (plateau) continue;
      if (table.rows[k].error <= 1e-12 * table.reference_lambda1) {
        plateau = true;
        continue;
      }
      if (k > 0) CHECK(table.rows[k].error < table.rows[k - 1].error);
    }
  }
  // the Laplacian eigenfunction cos(pi x/2) is entire
  const ConvergenceTable laplace = convergence_table(order(2.0), std::vector<int>{16}, 200);
  REQUIRE(laplace.rows.size() == 1);
  CHECK(laplace.rows[0].error <= 1e-12 * laplace.reference_lambda1);

  CHECK_THROWS_AS(convergence_table(order(1.6), ns, 128), std::invalid_argument);
  CHECK_THROWS_AS(convergence_table(order(1.6), std::vector<int>{}, 128), std::invalid_argument);
}

TEST_CASE("reliable_eigenvalues") {
  const EigenSolution a = solve(order(1.6), 128);
  CHECK(reliable_eigenvalues(a, a, kDefaultReliabilityTol) == 129);
  const EigenSolution b = solve(order(1.6), 256);
  CHECK(reliable_eigenvalues(a, b, 0.0) == 0);
  const int count = reliable_eigenvalues(a, b, kDefaultReliabilityTol);
  CHECK(count > 0);
  CHECK(count <= 129);
  // the count is the first index where agreement breaks
  CHECK(std::fabs(a.lambdas[count] - b.lambdas[count]) > kDefaultReliabilityTol * b.lambdas[count]);
  for (int i = 0; i < count; ++i) CHECK(std::fabs(a.lambdas[i] - b.lambdas[i]) <= kDefaultReliabilityTol * b.lambdas[i]);
  CHECK(reliable_eigenvalues(a, b, 1e-9) < reliable_eigenvalues(a, b, kDefaultReliabilityTol));
}

TEST_CASE("projection_error") {
  const FractionalOrder o = order(1.6);
  const std::vector<double> short_coeffs{1.0, 0.5, 0.25};
  const ProjectionError none = projection_error(o, short_coeffs, 2);
  CHECK(none.a_error == 0.0);
  CHECK(none.l2_error == 0.0);

  std::vector<double> spike(12, 0.0);
  spike[11] = 1.0;
  const ProjectionError single = projection_error(o, spike, 10);
  CHECK(single.a_error * single.a_error == doctest::Approx(a_norm_sq_gjf(o, 11)).epsilon(1e-14));
  // ||J_11||^2 = M_{11,11} / c_11^2
  CHECK(single.l2_error * single.l2_error ==
        doctest::Approx(mass_entry(o, 11, 11) / std::pow(basis_coeff(o, 11), 2)).epsilon(1e-11));

  SUBCASE("algebraic decay of truncated synthetic expansions") {
    // u_i = (1+i)^{-p}: the tail sum of (1+i)^{-2p} i^{2a-1} decays like N^{2a-2p},
    // so the energy error decays like N^{a-p}
    for (double t : {0.8, 1.6, 3.0}) {
      const double a = t / 2;
      for (double p : {3.0, 4.5}) {
        std::vector<double> coeffs(20000);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = std::pow(1.0 + i, -p);
        std::vector<double> log_n;
        std::vector<double> log_err;
        for (int n : {64, 128, 256, 512, 1024}) {
          // direct partial sum of the Parseval series, written out independently
          double direct = 0.0;
          for (std::size_t i = n + 1; i < coeffs.size(); ++i) {
            const double w = std::exp((t + 1.0) * std::log(2.0) + 2.0 * std::lgamma(i + a + 1.0) -
                                      2.0 * std::lgamma(i + 1.0) - std::log(2.0 * i + t + 1.0));
            direct += w * coeffs[i] * coeffs[i];
          }
          const double a_err = std::sqrt(tail_seminorm_sq(order(t), coeffs, n + 1));
          CHECK(a_err == doctest::Approx(std::sqrt(direct)).epsilon(1e-12));
          log_n.push_back(std::log(n));
          log_err.push_back(std::log(a_err));
        }
        CHECK(std::fabs(least_squares_slope(log_n, log_err) - (a - p)) <= 0.25);
      }
    }
  }
}

TEST_CASE("inverse_inequality_ratio") {
  std::vector<double> ratios;
  for (int n : kDyadic) ratios.push_back(inverse_inequality_ratio(order(1.2), n));
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  CHECK(*lo > 0.0);
  CHECK(*hi / *lo <= 4.0);

  std::vector<double> laplace;
  for (int n : kDyadic) laplace.push_back(inverse_inequality_ratio(order(2.0), n));
  for (std::size_t k = 1; k < laplace.size(); ++k) CHECK(laplace[k] <= laplace[k - 1]);
  CHECK(laplace.back() > 0.5 * laplace.front());

  const double one = inverse_inequality_ratio(order(1.6), 1);
  CHECK(std::isfinite(one));
  CHECK(one > 0.0);
  CHECK_THROWS_AS(inverse_inequality_ratio(order(1.6), 0), std::invalid_argument);
}

TEST_CASE("Poincare and min-max bounds over a sweep") {
  for (double t : {0.2, 0.5, 1.0, 1.6, 2.0, 3.6, 5.6}) {
    for (int n : {8, 16, 32, 64, 128}) {
      CAPTURE(t);
      CAPTURE(n);
      const SpectrumReport report = spectrum_report(solve(order(t), n));
      CHECK(report.lambdas[0] > report.poincare_bound);
      CHECK(report.lambdas[0] <= report.minmax_upper);
      CHECK(report.condition_number >= 1.0);
      CHECK(report.reliable_count == static_cast<int>(std::floor(2.0 * n / std::numbers::pi)));
      CHECK(report.weyl_ratios.size() == report.lambdas.size());
    }
  }
  // classical limit
  CHECK(std::fabs(solve(order(2.0), 64).lambdas[0] / (std::numbers::pi * std::numbers::pi / 4.0) - 1.0) <= 1e-12);
}

TEST_CASE("lambda_1 increases with the order") {
  double previous = 0.0;
  for (int step = 6; step <= 20; ++step) {
    const double l1 = solve(order(0.1 * step), 64).lambdas[0];
    CHECK(l1 > previous);
    previous = l1;
  }
}
