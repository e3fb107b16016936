#pragma once

#include <span>
#include <vector>

#include "riesz/assembly.hpp"
#include "riesz/linalg.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

/// Discrete eigenpairs of the Riesz problem on span{phi_0..phi_N}.
///
/// lambdas are ascending. vectors[i] holds the coefficients of the i-th
/// eigenfunction in phi_0..phi_N; it is zero off its parity, satisfies
/// u^T M u = 1, and its largest-magnitude coefficient is positive.
struct EigenSolution {
  FractionalOrder order;
  int n_max = 0;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> vectors;
  std::vector<Parity> parities;

  std::size_t size() const { return lambdas.size(); }
};

/// Assembles the mass matrix and solves both parity blocks. Since S = I the
/// problem is M u = mu u with lambda = 1/mu. Ties in lambda are ordered even
/// block first, then by position within the block.
EigenSolution solve(const FractionalOrder& order, int n_max);
EigenSolution solve(const MassMatrix& mass);

/// Samples u_index(x) = sum_j u_j phi_j(x) for a 1-based eigenpair index.
std::vector<double> eval_eigenfunction(const EigenSolution& sol, int index, std::span<const double> xs);

}  // namespace riesz
