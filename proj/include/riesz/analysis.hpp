#pragma once

// Derived quantities of a discrete spectrum: Weyl ratios, condition numbers,
// the Poincare and min-max bounds, convergence and projection-error studies.

#include <span>
#include <utility>
#include <vector>

#include "riesz/eig.hpp"

namespace riesz {

/// Relative agreement below which two eigenvalues count as reliable.
inline constexpr double kDefaultReliabilityTol = 1.2e-4;
/// Relative gap below which a convergence error is reported as 0.
inline constexpr double kConvergencePlateau = 1e-13;

struct SpectrumReport {
  FractionalOrder order;
  int n_max = 0;
  std::vector<double> lambdas;
  std::vector<double> weyl_ratios;
  double condition_number = 1.0;
  double poincare_bound = 0.0;  // Gamma(2a+1)
  double minmax_upper = 0.0;    // 1/M_00
  int reliable_count = 0;       // floor(2N/pi)
};

struct ConvergenceRow {
  int n = 0;
  double lambda1 = 0.0;
  double error = 0.0;
};

struct ConvergenceTable {
  FractionalOrder order;
  int reference_n = 0;
  double reference_lambda1 = 0.0;
  std::vector<ConvergenceRow> rows;
};

/// rho_n = lambda_n / (n pi / 2)^{2a}, n = 1..N+1.
std::vector<double> weyl_ratios(const EigenSolution& sol);

/// chi_N = lambda_{N+1,N} / lambda_{1,N}.
double condition_number(const EigenSolution& sol);

/// Lower bound Gamma(2a+1) on every eigenvalue.
double poincare_bound(const FractionalOrder& order);

/// 1/M_00: the Rayleigh quotient of phi_0, an upper bound on lambda_1.
double minmax_upper_bound(const FractionalOrder& order);

/// floor(2N/pi), the number of eigenvalues expected to be resolved.
int expected_reliable_count(int n_max);

SpectrumReport spectrum_report(const EigenSolution& sol);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log chi_N against log N. Requires at least three N.
double condition_slope(const FractionalOrder& order, std::span<const int> ns);

/// lambda_{1,N} - lambda_{1,ref} for each N; requires reference_n > max(ns).
/// Errors within kConvergencePlateau (relative) of the reference are floored to 0.
ConvergenceTable convergence_table(const FractionalOrder& order, std::span<const int> ns, int reference_n);

/// Largest m with |lambda_{i,coarse} - lambda_{i,fine}| <= rel_tol lambda_{i,fine}
/// for every i <= m.
int reliable_eigenvalues(const EigenSolution& coarse, const EigenSolution& fine, double rel_tol);

/// Energy-norm and L2 error of truncating sum_i u_i J_i^{-a,-a} after index N.
struct ProjectionError {
  double a_error = 0.0;
  double l2_error = 0.0;
};
ProjectionError projection_error(const FractionalOrder& order, std::span<const double> coeffs, int n_max);

/// lambda_{N+1,N} / N^{4a}; bounded in N when chi_N grows like N^{4a}.
double inverse_inequality_ratio(const FractionalOrder& order, int n_max);

}  // namespace riesz
