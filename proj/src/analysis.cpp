#include "riesz/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riesz/parallel.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

std::vector<double> weyl_ratios(const EigenSolution& sol) {
  std::vector<double> rho(sol.size());
  const double two_alpha = sol.order.two_alpha();
  for (std::size_t n = 1; n <= sol.size(); ++n) {
    rho[n - 1] = sol.lambdas[n - 1] / std::pow(0.5 * std::numbers::pi * static_cast<double>(n), two_alpha);
  }
  return rho;
}

double condition_number(const EigenSolution& sol) {
  if (sol.lambdas.empty()) throw std::invalid_argument("condition_number: empty solution");
  return sol.lambdas.back() / sol.lambdas.front();
}

double poincare_bound(const FractionalOrder& order) {
  return std::exp(log_gamma(order.two_alpha() + 1.0));
}

double minmax_upper_bound(const FractionalOrder& order) { return 1.0 / mass_entry(order, 0, 0); }

int expected_reliable_count(int n_max) {
  return static_cast<int>(std::floor(2.0 * n_max / std::numbers::pi));
}

SpectrumReport spectrum_report(const EigenSolution& sol) {
  return {sol.order,
          sol.n_max,
          sol.lambdas,
          weyl_ratios(sol),
          condition_number(sol),
          poincare_bound(sol.order),
          minmax_upper_bound(sol.order),
          expected_reliable_count(sol.n_max)};
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("least_squares_slope: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares_slope: abscissae are all equal");
  return sxy / sxx;
}

double condition_slope(const FractionalOrder& order, std::span<const int> ns) {
  if (ns.size() < 3) throw std::invalid_argument("condition_slope: need at least three N values");
  std::vector<double> log_n(ns.size());
  std::vector<double> log_chi(ns.size());
  parallel_for(ns.size(), [&](std::size_t k) {
    if (ns[k] < 1) throw std::invalid_argument("condition_slope: N must be positive");
    log_n[k] = std::log(static_cast<double>(ns[k]));
    log_chi[k] = std::log(condition_number(solve(order, ns[k])));
  });
  return least_squares_slope(log_n, log_chi);
}

ConvergenceTable convergence_table(const FractionalOrder& order, std::span<const int> ns, int reference_n) {
  if (ns.empty()) throw std::invalid_argument("convergence_table: empty N list");
  if (reference_n <= *std::max_element(ns.begin(), ns.end())) {
    throw std::invalid_argument("convergence_table: reference N must exceed every N in the list");
  }
  ConvergenceTable table{order, reference_n, 0.0, {}};
  table.reference_lambda1 = solve(order, reference_n).lambdas.front();
  table.rows.resize(ns.size());
  parallel_for(ns.size(), [&](std::size_t k) {
    const double l1 = solve(order, ns[k]).lambdas.front();
    double err = l1 - table.reference_lambda1;
    if (std::fabs(err) <= kConvergencePlateau * table.reference_lambda1) err = 0.0;
    table.rows[k] = {ns[k], l1, err};
  });
  return table;
}

int reliable_eigenvalues(const EigenSolution& coarse, const EigenSolution& fine, double rel_tol) {
  const std::size_t shared = std::min(coarse.size(), fine.size());
  int count = 0;
  for (std::size_t i = 0; i < shared; ++i) {
    if (std::fabs(coarse.lambdas[i] - fine.lambdas[i]) > rel_tol * fine.lambdas[i]) break;
    ++count;
  }
  return count;
}

ProjectionError projection_error(const FractionalOrder& order, std::span<const double> coeffs, int n_max) {
  if (n_max < 0) throw std::invalid_argument("projection_error: negative N");
  const std::size_t first = static_cast<std::size_t>(n_max) + 1;
  if (coeffs.size() <= first) return {};

  ProjectionError out;
  out.a_error = std::sqrt(tail_seminorm_sq(order, coeffs, first));

  // ||sum_{i>N} u_i J_i||^2 = int (1-x^2)^{2a} (sum u_i P_i^{a,a})^2, exact with
  // a Gauss rule for the weight (1-x^2)^{2a} of size len.
  const double a = order.alpha();
  const int last = static_cast<int>(coeffs.size()) - 1;
  const QuadratureRule rule = gauss_jacobi({2.0 * a, 2.0 * a}, last + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const std::vector<double> p = jacobi_eval_all({a, a}, last, rule.nodes[k]);
    double tail = 0.0;
    for (std::size_t i = first; i < coeffs.size(); ++i) tail += coeffs[i] * p[i];
    sum += rule.weights[k] * tail * tail;
  }
  out.l2_error = std::sqrt(sum);
  return out;
}

double inverse_inequality_ratio(const FractionalOrder& order, int n_max) {
  if (n_max < 1) throw std::invalid_argument("inverse_inequality_ratio: N must be >= 1");
  const EigenSolution sol = solve(order, n_max);
  return sol.lambdas.back() / std::pow(static_cast<double>(n_max), 2.0 * order.two_alpha());
}

}  // namespace riesz
