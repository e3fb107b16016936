#include "riesz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riesz {

namespace {

// Jacobi matrix of the orthonormal recurrence: diagonal entries and the
// off-diagonal couplings sqrt(beta_n), n = 1..m-1.
void jacobi_matrix(JacobiWeightPair p, int m, std::vector<double>& diag, std::vector<double>& off) {
  const double a = p.a;
  const double b = p.b;
  diag.assign(m, 0.0);
  off.assign(m > 0 ? m - 1 : 0, 0.0);
  for (int n = 0; n < m; ++n) {
    if (n == 0) {
      diag[0] = (b - a) / (a + b + 2.0);
    } else {
      const double s = 2.0 * n + a + b;
      diag[n] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int n = 1; n < m; ++n) {
    const double s = 2.0 * n + a + b;
    double beta = 0.0;
    if (n == 1) {
      // (n+a+b) cancels against (s-1); keeps a+b = -1 well defined
      beta = 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0));
    } else {
      beta = 4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[n - 1] = std::sqrt(beta);
  }
}

int exact_rule_size(int i, int j) { return (i + j + 1) / 2 + 1; }

double weighted_product(const QuadratureRule& rule, JacobiWeightPair p, int i, int j) {
  // evaluate in canonical (min, max) order so the result is symmetric in i, j
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double x = rule.nodes[k];
    sum += rule.weights[k] * jacobi_eval(p, lo, x) * jacobi_eval(p, hi, x);
  }
  return sum;
}

}  // namespace

QuadratureRule gauss_jacobi(JacobiWeightPair params, int m) {
  if (m < 1) throw std::invalid_argument("gauss_jacobi: rule size must be positive");
  if (!params.classical()) throw std::invalid_argument("gauss_jacobi: parameters must exceed -1");

  std::vector<double> diag;
  std::vector<double> off;
  jacobi_matrix(params, m, diag, off);

  Matrix first_row(1, static_cast<std::size_t>(m));
  first_row(0, 0) = 1.0;
  tridiagonal_ql(diag, std::move(off), first_row);

  const double mu0 = jacobi_norm_sq(params, 0);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  QuadratureRule rule;
  rule.params = params;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int k = 0; k < m; ++k) {
    const double v = first_row(0, perm[k]);
    rule.nodes[k] = diag[perm[k]];
    rule.weights[k] = mu0 * v * v;
  }
  if (params.symmetric()) {
    for (int k = 0; k < m / 2; ++k) {
      const int r = m - 1 - k;
      const double x = 0.5 * (rule.nodes[r] - rule.nodes[k]);
      const double w = 0.5 * (rule.weights[r] + rule.weights[k]);
      rule.nodes[k] = -x;
      rule.nodes[r] = x;
      rule.weights[k] = w;
      rule.weights[r] = w;
    }
    if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  }
  return rule;
}

double oracle_mass_entry(const FractionalOrder& order, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("oracle_mass_entry: negative index");
  const double a = order.alpha();
  const QuadratureRule rule = gauss_jacobi({2.0 * a, 2.0 * a}, exact_rule_size(i, j));
  return basis_coeff(order, i) * basis_coeff(order, j) * weighted_product(rule, {a, a}, i, j);
}

double oracle_a_inner(const FractionalOrder& order, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("oracle_a_inner: negative index");
  const double a = order.alpha();
  const QuadratureRule rule = gauss_jacobi({a, a}, exact_rule_size(m, n));
  const double ratio = std::exp(log_gamma(m + 2.0 * a + 1.0) - log_gamma(m + 1.0));
  return ratio * weighted_product(rule, {a, a}, m, n);
}

Matrix oracle_mass_matrix(const FractionalOrder& order, int n_max) {
  if (n_max < 0) throw std::invalid_argument("oracle_mass_matrix: negative degree");
  const double a = order.alpha();
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  std::vector<QuadratureRule> rules;
  for (int m = 1; m <= exact_rule_size(n_max, n_max); ++m) rules.push_back(gauss_jacobi({2.0 * a, 2.0 * a}, m));
  std::vector<double> c(dim);
  for (std::size_t i = 0; i < dim; ++i) c[i] = basis_coeff(order, static_cast<int>(i));

  Matrix out(dim, dim);
  for (int i = 0; i <= n_max; ++i) {
    for (int j = 0; j <= i; ++j) {
      const QuadratureRule& rule = rules[exact_rule_size(i, j) - 1];
      const double v = c[j] * c[i] * weighted_product(rule, {a, a}, j, i);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

}  // namespace riesz
