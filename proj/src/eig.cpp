#include "riesz/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "riesz/parallel.hpp"

namespace riesz {

namespace {

// The parity blocks are graded: entries shrink away from the top-left corner.
// The Householder reduction and the QL sweep both work from the bottom-right
// corner, so the block is handed over in reversed index order; the smallest
// mu (largest lambda) then keeps far more relative accuracy.
SymEigResult solve_graded_block(const Matrix& block) {
  const std::size_t n = block.rows();
  Matrix reversed(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reversed(i, j) = block(n - 1 - i, n - 1 - j);
  }
  SymEigResult r = sym_eig(reversed);
  Matrix vectors(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vectors(i, j) = r.vectors(n - 1 - i, j);
  }
  r.vectors = std::move(vectors);
  return r;
}

struct Candidate {
  double lambda;
  Parity parity;
  std::size_t column;  // eigenvector column within the block solution
};

}  // namespace

EigenSolution solve(const FractionalOrder& order, int n_max) {
  return solve(assemble_mass(order, n_max));
}

EigenSolution solve(const MassMatrix& mass) {
  const Parity parities[2] = {Parity::even, Parity::odd};
  SymEigResult blocks[2];
  parallel_for(2, [&](std::size_t b) {
    const Matrix& block = mass.block(parities[b]);
    if (block.rows() > 0) blocks[b] = solve_graded_block(block);
  });

  std::vector<Candidate> candidates;
  for (int b = 0; b < 2; ++b) {
    // ascending mu is descending lambda; walk backwards so each block's list is ascending
    const auto& values = blocks[b].values;
    for (std::size_t c = values.size(); c-- > 0;) {
      const double mu = values[c];
      if (!(mu > 0.0)) {
        throw std::runtime_error("solve: mass matrix block is not positive definite (mu = " +
                                 std::to_string(mu) + ", 2alpha = " +
                                 std::to_string(mass.order().two_alpha()) + ", N = " +
                                 std::to_string(mass.n_max()) + ")");
      }
      candidates.push_back({1.0 / mu, parities[b], c});
    }
  }
  // stable: equal lambdas keep even-before-odd and block order
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.lambda < y.lambda; });

  const std::size_t dim = static_cast<std::size_t>(mass.n_max()) + 1;
  EigenSolution sol{mass.order(), mass.n_max(), {}, {}, {}};
  sol.lambdas.reserve(dim);
  sol.vectors.reserve(dim);
  sol.parities.reserve(dim);
  for (const Candidate& cand : candidates) {
    const int b = cand.parity == Parity::even ? 0 : 1;
    const Matrix& block = mass.block(cand.parity);
    const Matrix& vecs = blocks[b].vectors;
    const std::size_t m = block.rows();

    std::vector<double> local(m);
    for (std::size_t r = 0; r < m; ++r) local[r] = vecs(r, cand.column);
    // u^T M u = 1 in the discrete space
    const std::vector<double> mu_local = multiply(block, local);
    const double quad = std::inner_product(local.begin(), local.end(), mu_local.begin(), 0.0);
    double scale = 1.0 / std::sqrt(quad);

    std::size_t arg_max = 0;
    for (std::size_t r = 1; r < m; ++r) {
      if (std::fabs(local[r]) > std::fabs(local[arg_max])) arg_max = r;
    }
    if (local[arg_max] < 0.0) scale = -scale;

    std::vector<double> full(dim, 0.0);
    for (std::size_t r = 0; r < m; ++r) full[MassMatrix::global_index(cand.parity, r)] = scale * local[r];

    sol.lambdas.push_back(cand.lambda);
    sol.vectors.push_back(std::move(full));
    sol.parities.push_back(cand.parity);
  }
  return sol;
}

std::vector<double> eval_eigenfunction(const EigenSolution& sol, int index, std::span<const double> xs) {
  if (index < 1 || static_cast<std::size_t>(index) > sol.size()) {
    throw std::out_of_range("eval_eigenfunction: index " + std::to_string(index) + " outside [1, " +
                            std::to_string(sol.size()) + "]");
  }
  const std::vector<double>& u = sol.vectors[static_cast<std::size_t>(index) - 1];
  const double a = sol.order.alpha();
  std::vector<double> c(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) c[j] = u[j] == 0.0 ? 0.0 : u[j] * basis_coeff(sol.order, static_cast<int>(j));

  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(std::fabs(x) <= 1.0)) throw std::domain_error("eval_eigenfunction: sample outside [-1, 1]");
    if (std::fabs(x) == 1.0) {
      out.push_back(0.0);
      continue;
    }
    const std::vector<double> p = jacobi_eval_all({a, a}, sol.n_max, x);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * p[j];
    out.push_back(std::exp(a * (std::log1p(-x) + std::log1p(x))) * sum);
  }
  return out;
}

}  // namespace riesz
