#include "riesz/assembly.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "riesz/parallel.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

double mass_entry(const FractionalOrder& order, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("mass_entry: negative index");
  if ((i + j) % 2 != 0) return 0.0;
  const double a = order.alpha();
  const int s = (i + j) / 2;
  const int d = (j - i) / 2;

  const SignedLogMagnitude r1 = recip_gamma_signed(a + 1.0 - d);
  const SignedLogMagnitude r2 = recip_gamma_signed(a + 1.0 + d);
  const int sign = (std::abs(d) % 2 == 0 ? 1 : -1) * r1.sign * r2.sign;
  if (sign == 0) return 0.0;

  // (i+j)! / (2^{i+j} s!) = Gamma(s+1/2)/sqrt(pi) folds the factorials and the
  // power of two into one Gamma ratio with nearby arguments.
  const double log_mag = 0.5 * (std::log(2.0 * i + 2.0 * a + 1.0) + std::log(2.0 * j + 2.0 * a + 1.0)) +
                         log_gamma(2.0 * a + 1.0) + log_gamma(s + 0.5) -
                         (2.0 * a + 1.0) * std::numbers::ln2 - log_gamma(2.0 * a + s + 1.5) +
                         r1.log_mag + r2.log_mag;
  return sign * std::exp(log_mag);
}

MassMatrix assemble_mass(const FractionalOrder& order, int n_max) {
  if (n_max < 0) throw std::invalid_argument("assemble_mass: negative degree");
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  MassMatrix m(order, n_max);
  m.entries_ = Matrix(dim, dim);

  parallel_for(dim, [&](std::size_t row) {
    const int i = static_cast<int>(row);
    for (int j = i; j <= n_max; j += 2) m.entries_(row, j) = mass_entry(order, i, j);
  });
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) m.entries_(i, j) = m.entries_(j, i);
  }

  const std::size_t n_even = (dim + 1) / 2;
  const std::size_t n_odd = dim / 2;
  m.even_ = Matrix(n_even, n_even);
  m.odd_ = Matrix(n_odd, n_odd);
  for (std::size_t r = 0; r < n_even; ++r) {
    for (std::size_t c = 0; c < n_even; ++c) m.even_(r, c) = m.entries_(2 * r, 2 * c);
  }
  for (std::size_t r = 0; r < n_odd; ++r) {
    for (std::size_t c = 0; c < n_odd; ++c) m.odd_(r, c) = m.entries_(2 * r + 1, 2 * c + 1);
  }
  return m;
}

double stiffness_check(const FractionalOrder& order, int n_max) {
  if (n_max < 0 || n_max > 64) throw std::invalid_argument("stiffness_check: N must lie in [0, 64]");
  double worst = 0.0;
  for (int i = 0; i <= n_max; ++i) {
    const double ci = basis_coeff(order, i);
    for (int j = 0; j <= n_max; ++j) {
      const double value = ci * basis_coeff(order, j) * oracle_a_inner(order, i, j);
      worst = std::max(worst, std::fabs(value - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace riesz
