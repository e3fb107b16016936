#include "riesz/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace riesz {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLnPi = 1.1447298858494002;  // ln(pi)

void require_classical(JacobiWeightPair p) {
  if (!p.classical()) {
    throw std::invalid_argument("Jacobi parameters must exceed -1 (got a=" + std::to_string(p.a) +
                                ", b=" + std::to_string(p.b) + ")");
  }
}

}  // namespace

FractionalOrder FractionalOrder::from_two_alpha(double two_alpha) {
  if (!std::isfinite(two_alpha) || two_alpha <= 0.0) {
    throw std::invalid_argument("fractional order 2*alpha must be positive, got " +
                                std::to_string(two_alpha));
  }
  int k = 1;
  if (two_alpha >= 1.0) {
    k = static_cast<int>(std::floor(0.5 * (two_alpha + 1.0)));
  }
  return FractionalOrder(two_alpha, k);
}

bool FractionalOrder::integer_alpha() const {
  const double a = alpha();
  return a == std::floor(a);
}

double SignedLogMagnitude::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_mag);
}

SignedLogMagnitude operator/(SignedLogMagnitude x, SignedLogMagnitude y) {
  if (y.sign == 0) throw std::domain_error("division by a zero SignedLogMagnitude");
  return {x.sign * y.sign, x.log_mag - y.log_mag};
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma requires x > 0, got " + std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant: std::lgamma writes the global signgam
#else
  return std::lgamma(x);
#endif
}

double sin_pi(double x) {
  if (x == std::floor(x)) return 0.0;
  // reduce to r in [-1, 1] so that sin(pi r) keeps full relative accuracy
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) return std::sin(std::numbers::pi * (1.0 - r));
  if (r < -0.5) return -std::sin(std::numbers::pi * (1.0 + r));
  return std::sin(std::numbers::pi * r);
}

SignedLogMagnitude recip_gamma_signed(double x) {
  if (x > 0.0) return {1, -log_gamma(x)};
  if (x == std::floor(x)) return {0, 0.0};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = sin_pi(x);
  return {s > 0.0 ? 1 : -1, log_gamma(1.0 - x) + std::log(std::fabs(s)) - kLnPi};
}

std::vector<double> jacobi_eval_all(JacobiWeightPair params, int n, double x) {
  require_classical(params);
  if (n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  const double a = params.a;
  const double b = params.b;
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n == 0) return p;
  p[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a2b2);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    p[k] = (c2 * p[k - 1] - c3 * p[k - 2]) / c1;
  }
  return p;
}

double jacobi_eval(JacobiWeightPair params, int n, double x) {
  require_classical(params);
  if (n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  const double a = params.a;
  const double b = params.b;
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a2b2);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  return p;
}

double log_jacobi_norm_sq(JacobiWeightPair params, int n) {
  require_classical(params);
  if (n < 0) throw std::invalid_argument("jacobi_norm_sq: negative degree");
  const double a = params.a;
  const double b = params.b;
  if (n == 0) {
    // (a+b+1) Gamma(a+b+1) folded into Gamma(a+b+2); a+b+1 may be <= 0
    return (a + b + 1.0) * kLn2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(a + b + 2.0);
  }
  return (a + b + 1.0) * kLn2 - std::log(2.0 * n + a + b + 1.0) + log_gamma(n + a + 1.0) +
         log_gamma(n + b + 1.0) - log_gamma(n + 1.0) - log_gamma(n + a + b + 1.0);
}

double jacobi_norm_sq(JacobiWeightPair params, int n) {
  return std::exp(log_jacobi_norm_sq(params, n));
}

double gjf_eval(const FractionalOrder& order, int n, double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  const double a = order.alpha();
  // (1-x)(1+x) kept factored to avoid cancellation in 1-x^2 near the ends
  const double weight = std::exp(a * (std::log1p(-x) + std::log1p(x)));
  return weight * jacobi_eval({a, a}, n, x);
}

double log_basis_coeff(const FractionalOrder& order, int n) {
  if (n < 0) throw std::invalid_argument("basis_coeff: negative index");
  const double a = order.alpha();
  return 0.5 * std::log(2.0 * n + 2.0 * a + 1.0) + log_gamma(n + 1.0) - (a + 0.5) * kLn2 -
         log_gamma(n + a + 1.0);
}

double basis_coeff(const FractionalOrder& order, int n) {
  return std::exp(log_basis_coeff(order, n));
}

DerivativeImage riesz_derivative_image(const FractionalOrder& order, int nu, int n) {
  const double a = order.alpha();
  if (nu < 0 || nu > static_cast<int>(std::floor(a))) {
    throw std::out_of_range("riesz_derivative_image: nu must lie in [0, floor(alpha)]");
  }
  if (n < 0) throw std::invalid_argument("riesz_derivative_image: negative index");
  const double log_scale =
      2.0 * nu * kLn2 + log_gamma(n + 2.0 * a - 2.0 * nu + 1.0) - log_gamma(n + 1.0);
  const double label = a - 2.0 * nu;
  return {order.sign_k() * std::exp(log_scale), {label, label}, n + 2 * nu};
}

double log_a_norm_sq_gjf(const FractionalOrder& order, int n) {
  if (n < 0) throw std::invalid_argument("a_norm_sq_gjf: negative index");
  const double a = order.alpha();
  return (2.0 * a + 1.0) * kLn2 + 2.0 * log_gamma(n + a + 1.0) - 2.0 * log_gamma(n + 1.0) -
         std::log(2.0 * n + 2.0 * a + 1.0);
}

double a_norm_sq_gjf(const FractionalOrder& order, int n) {
  return std::exp(log_a_norm_sq_gjf(order, n));
}

double tail_seminorm_sq(const FractionalOrder& order, std::span<const double> coeffs,
                        std::size_t from) {
  double sum = 0.0;
  for (std::size_t i = from; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    sum += a_norm_sq_gjf(order, static_cast<int>(i)) * coeffs[i] * coeffs[i];
  }
  return sum;
}

}  // namespace riesz
