#pragma once

// Gauss-Jacobi rules built by Golub-Welsch, and brute-force inner products
// used to cross-check the closed-form mass and stiffness entries.

#include <vector>

#include "riesz/linalg.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

/// m-point Gauss rule for the weight (1-x)^a (1+x)^b on (-1,1). Nodes are
/// strictly increasing, weights positive.
struct QuadratureRule {
  JacobiWeightPair params;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Throws std::invalid_argument for m < 1 or a non-classical pair.
QuadratureRule gauss_jacobi(JacobiWeightPair params, int m);

/// c_i c_j int (1-x^2)^{2a} P_i^{a,a} P_j^{a,a} dx, integrated exactly with a
/// Gauss rule for the weight (1-x^2)^{2a}.
double oracle_mass_entry(const FractionalOrder& order, int i, int j);

/// (Gamma(m+2a+1)/m!) int (1-x^2)^a P_m^{a,a} P_n^{a,a} dx by exact quadrature.
double oracle_a_inner(const FractionalOrder& order, int m, int n);

/// Full (N+1)x(N+1) oracle mass matrix. Same values as oracle_mass_entry, with
/// one rule per required size instead of one per entry.
Matrix oracle_mass_matrix(const FractionalOrder& order, int n_max);

}  // namespace riesz
