#pragma once

// Gamma-function machinery, Jacobi polynomials and the generalized Jacobi
// functions J_n^{-a,-a}(x) = (1-x^2)^a P_n^{a,a}(x) that span the Galerkin
// space of the Riesz fractional eigenproblem.

#include <span>
#include <vector>

namespace riesz {

/// Order 2a of the Riesz operator, with the integer k such that
/// 2a lies in [2k-1, 2k+1) (k = 1 when 2a < 1).
class FractionalOrder {
public:
  /// Throws std::invalid_argument unless two_alpha is finite and positive.
  static FractionalOrder from_two_alpha(double two_alpha);

  double two_alpha() const { return two_alpha_; }
  double alpha() const { return 0.5 * two_alpha_; }
  int k() const { return k_; }
  int sign_k() const { return (k_ % 2 == 0) ? 1 : -1; }

  /// True when alpha is an integer (the mass matrix is then banded).
  bool integer_alpha() const;

private:
  FractionalOrder(double two_alpha, int k) : two_alpha_(two_alpha), k_(k) {}
  double two_alpha_;
  int k_;
};

/// Exponents of the weight (1-x)^a (1+x)^b. Classical when a, b > -1; the
/// derivative image of a basis function may carry a non-classical label.
struct JacobiWeightPair {
  double a = 0.0;
  double b = 0.0;

  bool classical() const { return a > -1.0 && b > -1.0; }
  bool symmetric() const { return a == b; }
};

/// A real value stored as sign * exp(log_mag), for Gamma ratios that would
/// otherwise overflow or that involve Gamma at negative arguments.
struct SignedLogMagnitude {
  int sign = 0;
  double log_mag = 0.0;

  double value() const;

  friend SignedLogMagnitude operator*(SignedLogMagnitude x, SignedLogMagnitude y) {
    return {x.sign * y.sign, x.log_mag + y.log_mag};
  }
  friend SignedLogMagnitude operator/(SignedLogMagnitude x, SignedLogMagnitude y);
};

/// ln Gamma(x) for x > 0; throws std::domain_error otherwise.
double log_gamma(double x);

/// 1/Gamma(x) for every real x. Zero (sign 0) at the poles 0, -1, -2, ...
SignedLogMagnitude recip_gamma_signed(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// P_n^{a,b}(x) by the three-term recurrence. Requires a classical pair.
double jacobi_eval(JacobiWeightPair params, int n, double x);

/// P_0^{a,b}(x) .. P_n^{a,b}(x) from one pass of the recurrence.
std::vector<double> jacobi_eval_all(JacobiWeightPair params, int n, double x);

/// gamma_n^{a,b} = int (1-x)^a (1+x)^b P_n^{a,b}(x)^2 dx.
double jacobi_norm_sq(JacobiWeightPair params, int n);
double log_jacobi_norm_sq(JacobiWeightPair params, int n);

/// (1-x^2)^a P_n^{a,a}(x); exactly zero at x = +-1.
double gjf_eval(const FractionalOrder& order, int n, double x);

/// Normalization c_n making phi_n = c_n J_n^{-a,-a} unit in the energy norm.
double basis_coeff(const FractionalOrder& order, int n);
double log_basis_coeff(const FractionalOrder& order, int n);

/// D^{2a-2nu} J_n^{-a,-a} = scale * P_degree^{params}.
struct DerivativeImage {
  double scale = 0.0;
  JacobiWeightPair params;
  int degree = 0;
};

/// Throws std::out_of_range unless 0 <= nu <= floor(a).
DerivativeImage riesz_derivative_image(const FractionalOrder& order, int nu, int n);

/// (D^a J_n, D^a J_n) = 2^{2a+1} Gamma(n+a+1)^2 / (n!^2 (2n+2a+1)).
double a_norm_sq_gjf(const FractionalOrder& order, int n);
double log_a_norm_sq_gjf(const FractionalOrder& order, int n);

/// Sum over i >= from of a_norm_sq_gjf(i) * coeffs[i]^2, where coeffs are
/// the expansion coefficients in J_i^{-a,-a}.
double tail_seminorm_sq(const FractionalOrder& order, std::span<const double> coeffs,
                        std::size_t from = 0);

}  // namespace riesz
