#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "riesz/analysis.hpp"
#include "riesz/eig.hpp"

using namespace riesz;

namespace {

FractionalOrder order(double two_alpha) { return FractionalOrder::from_two_alpha(two_alpha); }

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::vector<double> uniform_grid(int samples) {
  std::vector<double> xs(samples);
  for (int k = 0; k < samples; ++k) xs[k] = -1.0 + 2.0 * k / (samples - 1);
  xs.back() = 1.0;
  return xs;
}

}  // namespace

TEST_CASE("solve reproduces tabulated eigenvalues") {
  const EigenSolution laplace = solve(order(2.0), 64);
  CHECK(rel_err(laplace.lambdas[0], 2.467401100272) <= 1e-9);

  const EigenSolution frac = solve(order(1.6), 64);
  CHECK(rel_err(frac.lambdas[0], 1.7282959570964) <= 1e-9);
  CHECK(rel_err(frac.lambdas[1], 5.75634828003) <= 1e-8);

  const EigenSolution low = solve(order(0.5), 64);
  CHECK(rel_err(low.lambdas[0], 0.9701) <= 1e-3);
  CHECK(rel_err(low.lambdas[1], 1.6015) <= 1e-3);
  CHECK(rel_err(low.lambdas[2], 2.0288) <= 1e-3);
}

TEST_CASE("solve on a one-dimensional space") {
  const EigenSolution one = solve(order(2.0), 0);
  REQUIRE(one.size() == 1);
  CHECK(one.lambdas[0] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(one.parities[0] == Parity::even);
  CHECK(one.vectors[0][0] == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
}

TEST_CASE("EigenSolution invariants") {
  for (double t : {0.2, 1.0, 1.6, 2.0, 3.6}) {
    for (int n : {1, 8, 33}) {
      CAPTURE(t);
      CAPTURE(n);
      const MassMatrix mass = assemble_mass(order(t), n);
      const EigenSolution sol = solve(mass);
      REQUIRE(sol.size() == static_cast<std::size_t>(n + 1));
      const double norm = mass.entries().max_abs();
      for (std::size_t i = 0; i < sol.size(); ++i) {
        if (i > 0) CHECK(sol.lambdas[i] >= sol.lambdas[i - 1]);
        const std::vector<double>& u = sol.vectors[i];
        std::size_t arg_max = 0;
        for (std::size_t j = 0; j < u.size(); ++j) {
          const bool on_parity = (j % 2 == 0) == (sol.parities[i] == Parity::even);
          if (!on_parity) CHECK(u[j] == 0.0);
          if (std::fabs(u[j]) > std::fabs(u[arg_max])) arg_max = j;
        }
        CHECK(u[arg_max] > 0.0);

        const std::vector<double> mu = multiply(mass.entries(), u);
        double quad = 0.0;
        double res = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) {
          quad += u[j] * mu[j];
          res += std::pow(mu[j] - u[j] / sol.lambdas[i], 2);
        }
        CHECK(std::fabs(quad - 1.0) <= 1e-12);
        // u has unit M-norm, so rescale the residual to a unit Euclidean vector
        double unorm = 0.0;
        for (double v : u) unorm += v * v;
        CHECK(std::sqrt(res / unorm) <= 1e-12 * norm);
      }
    }
  }
}

TEST_CASE("Ritz values: bounds and monotonicity in N") {
  for (double t : {0.2, 0.5, 1.2, 2.0, 3.6}) {
    CAPTURE(t);
    const EigenSolution coarse = solve(order(t), 20);
    const EigenSolution fine = solve(order(t), 41);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      CHECK(fine.lambdas[i] <= coarse.lambdas[i] * (1.0 + 1e-10));
    }
    CHECK(coarse.lambdas[0] > poincare_bound(order(t)));
    CHECK(coarse.lambdas[0] <= minmax_upper_bound(order(t)));
  }
}

TEST_CASE("parity alternates for 2alpha in [1.2, 2]") {
  for (double t : {1.2, 1.4, 1.6, 1.8, 2.0}) {
    const EigenSolution sol = solve(order(t), 32);
    for (std::size_t i = 0; i < 10; ++i) CHECK(sol.parities[i] == (i % 2 == 0 ? Parity::even : Parity::odd));
  }
}

TEST_CASE("eval_eigenfunction") {
  const EigenSolution sol = solve(order(2.0), 32);
  const std::vector<double> xs = uniform_grid(257);
  const std::vector<double> u1 = eval_eigenfunction(sol, 1, xs);
  CHECK(u1.front() == 0.0);
  CHECK(u1.back() == 0.0);
  // L2-normalized Dirichlet Laplacian eigenfunction on (-1, 1)
  const double sign = u1[128] > 0 ? 1.0 : -1.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) worst = std::max(worst, std::fabs(u1[k] - sign * std::cos(0.5 * std::numbers::pi * xs[k])));
  CHECK(worst <= 1e-8);
  for (std::size_t k = 0; k < xs.size(); ++k) CHECK(std::fabs(u1[k] - u1[xs.size() - 1 - k]) <= 1e-12);

  const std::vector<double> u2 = eval_eigenfunction(sol, 2, xs);
  for (std::size_t k = 0; k < xs.size(); ++k) CHECK(std::fabs(u2[k] + u2[xs.size() - 1 - k]) <= 1e-12);
  worst = 0.0;
  const double sign2 = u2[64] > 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < xs.size(); ++k) worst = std::max(worst, std::fabs(u2[k] + sign2 * std::sin(std::numbers::pi * xs[k])));
  CHECK(worst <= 1e-8);

  for (double t : {0.3, 1.6, 5.6}) {
    const EigenSolution s = solve(order(t), 12);
    for (int idx = 1; idx <= 13; ++idx) {
      const std::vector<double> ends = eval_eigenfunction(s, idx, std::vector<double>{-1.0, 1.0});
      CHECK(ends[0] == 0.0);
      CHECK(ends[1] == 0.0);
    }
  }

  CHECK_THROWS_AS(eval_eigenfunction(sol, 0, xs), std::out_of_range);
  CHECK_THROWS_AS(eval_eigenfunction(sol, 34, xs), std::out_of_range);
  CHECK_THROWS_AS(eval_eigenfunction(sol, 1, std::vector<double>{1.5}), std::domain_error);
}

TEST_CASE("L2 normalization agrees with sampled quadrature") {
  // trapezoid on a fine grid, independent of the mass matrix
  const EigenSolution sol = solve(order(1.6), 24);
  const int samples = 20001;
  const std::vector<double> xs = uniform_grid(samples);
  for (int idx = 1; idx <= 3; ++idx) {
    const std::vector<double> u = eval_eigenfunction(sol, idx, xs);
    double sum = 0.0;
    for (int k = 0; k < samples; ++k) sum += (k == 0 || k == samples - 1 ? 0.5 : 1.0) * u[k] * u[k];
    CHECK(sum * 2.0 / (samples - 1) == doctest::Approx(1.0).epsilon(1e-5));
  }
}
