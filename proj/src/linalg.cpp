#include "riesz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace riesz {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

namespace {

struct Rotation {
  std::size_t col;  // rotates columns col and col+1
  double c;
  double s;
};

// Householder reduction to tridiagonal form (EISPACK tred2 ordering: the
// reduction runs from the last row upwards). On return v holds the
// accumulated orthogonal transform, d the diagonal and e the sub-diagonal
// with e[0] = 0 and e[i] coupling rows i-1 and i.
void householder_tridiagonalize(Matrix& v, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = v.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::fabs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // accumulate transformations
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

}  // namespace

void tridiagonal_ql(std::vector<double>& diag, std::vector<double> offdiag, Matrix& z) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  if (offdiag.size() + 1 != n || z.cols() != n) {
    throw std::invalid_argument("tridiagonal_ql: dimension mismatch");
  }
  std::vector<double>& d = diag;
  std::vector<double> e = std::move(offdiag);
  e.push_back(0.0);

  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t max_sweeps = 30 * n;
  std::size_t sweeps = 0;
  std::vector<Rotation> rotations;
  rotations.reserve(n);

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t m = l;
    do {
      // deflate on a local test so that small eigenvalues keep relative accuracy
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps) {
        throw std::runtime_error("tridiagonal_ql: no convergence after " +
                                 std::to_string(max_sweeps) + " sweeps (n=" + std::to_string(n) +
                                 ", stuck at index " + std::to_string(l) + ")");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      rotations.clear();
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        rotations.push_back({i, c, s});
      }
      // rows of z are independent, so apply the whole sweep row by row
      for (std::size_t k = 0; k < z.rows(); ++k) {
        auto zr = z.row(k);
        for (const Rotation& rot : rotations) {
          const double f = zr[rot.col + 1];
          zr[rot.col + 1] = rot.s * zr[rot.col] + rot.c * f;
          zr[rot.col] = rot.c * zr[rot.col] - rot.s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

SymEigResult sym_eig(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("sym_eig: matrix is not square");
  const double norm = a.max_abs();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) asym = std::max(asym, std::fabs(a(i, j) - a(j, i)));
  }
  if (asym > 1e-14 * norm) {
    throw std::invalid_argument("sym_eig: matrix is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
  }
  if (n == 0) return {};

  Matrix v = a;
  std::vector<double> d;
  std::vector<double> e;
  householder_tridiagonalize(v, d, e);

  std::vector<double> offdiag(e.begin() + 1, e.end());
  tridiagonal_ql(d, std::move(offdiag), v);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

  SymEigResult out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = d[perm[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, perm[j]);
  }
  return out;
}

}  // namespace riesz
