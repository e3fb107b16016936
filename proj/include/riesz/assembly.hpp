#pragma once

// Galerkin system S u = lambda M u in the normalized basis
// phi_n = c_n (1-x^2)^a P_n^{a,a}. The stiffness matrix S is the identity and
// is never stored; the mass matrix has a closed form.

#include <vector>

#include "riesz/linalg.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

enum class Parity { even, odd };

/// Symmetric positive-definite mass matrix (phi_j, phi_i), 0 <= i, j <= N,
/// together with its even-index and odd-index diagonal blocks. Entries with
/// i + j odd are exact zeros, so the two blocks carry the whole matrix.
class MassMatrix {
public:
  const FractionalOrder& order() const { return order_; }
  int n_max() const { return n_max_; }
  const Matrix& entries() const { return entries_; }
  const Matrix& block(Parity p) const { return p == Parity::even ? even_ : odd_; }
  const Matrix& even_block() const { return even_; }
  const Matrix& odd_block() const { return odd_; }

  /// Global basis index of row r of the given parity block.
  static int global_index(Parity p, std::size_t r) {
    return static_cast<int>(2 * r + (p == Parity::odd ? 1 : 0));
  }

private:
  friend MassMatrix assemble_mass(const FractionalOrder& order, int n_max);
  MassMatrix(const FractionalOrder& order, int n_max) : order_(order), n_max_(n_max) {}

  FractionalOrder order_;
  int n_max_;
  Matrix entries_;
  Matrix even_;
  Matrix odd_;
};

/// Closed-form M_ij. Zero for odd i + j, and for integer a whenever
/// |i - j| >= 2a + 2 (1/Gamma vanishes at the poles).
double mass_entry(const FractionalOrder& order, int i, int j);

MassMatrix assemble_mass(const FractionalOrder& order, int n_max);

/// max_{i,j <= N} |c_i c_j oracle_a_inner(i, j) - delta_ij|. Requires N <= 64.
double stiffness_check(const FractionalOrder& order, int n_max);

}  // namespace riesz
