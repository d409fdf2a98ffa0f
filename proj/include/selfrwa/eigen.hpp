#pragma once

// Dense symmetric and symmetric-tridiagonal eigensolvers: Householder
// reduction followed by the implicit-shift QL iteration (EISPACK tred2/tql2
// lineage).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "selfrwa/errors.hpp"
#include "selfrwa/matrix.hpp"

namespace selfrwa {

enum class Vectors { none, full };

struct EigenResult {
  std::vector<double> values;                  ///< ascending
  std::optional<DenseMatrix<double>> vectors;  ///< column j pairs with values[j]
};

namespace detail {

// Row-major n x r block. Row i holds component i of the tracked basis rows,
// i.e. W(i, k) = V[k][i]; QL rotations then touch two contiguous rows.
struct RotationTarget {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<double> w;
  double* row(std::size_t i) { return w.data() + i * r; }
};

// Implicit QL on the tridiagonal (d, e) where e[i] couples i-1 and i (e[0]
// unused). Eigenvalues land in d, unsorted. The rotations are applied to `z`.
inline void tql2(std::vector<double>& d, std::vector<double>& e, RotationTarget* z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t max_iter = 50 * n;
  std::size_t total_iter = 0;
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      do {
        if (++total_iter > max_iter)
          throw ConvergenceFailure("symmetric QL iteration did not converge within " +
                                   std::to_string(max_iter) + " sweeps");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (z) {
            double* lo = z->row(ii);
            double* hi = z->row(ii + 1);
            for (std::size_t k = 0; k < z->r; ++k) {
              const double t = hi[k];
              hi[k] = s * lo[k] + c * t;
              lo[k] = c * lo[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

// Sorts ascending, permuting the rows of z alongside.
inline void sort_ascending(std::vector<double>& d, RotationTarget* z) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      if (z) std::swap_ranges(z->row(i), z->row(i) + z->r, z->row(k));
    }
  }
}

inline DenseMatrix<double> columns_from_rows(RotationTarget& z) {
  DenseMatrix<double> v(z.n);
  for (std::size_t j = 0; j < z.n; ++j) {
    const double* src = z.row(j);
    for (std::size_t k = 0; k < z.r; ++k) v(k, j) = src[k];
  }
  return v;
}

inline void check_finite(std::span<const double> xs, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

}  // namespace detail

/// Eigenvalues (ascending) and optionally eigenvectors of a symmetric tridiagonal matrix.
inline EigenResult symtridiag_eigen(std::span<const double> diag, std::span<const double> offdiag,
                                    Vectors want = Vectors::none) {
  const std::size_t n = diag.size();
  if (n == 0) throw InvalidArgument("symtridiag_eigen: empty matrix");
  if (offdiag.size() + 1 != n)
    throw InvalidArgument("symtridiag_eigen: offdiag must have length dim-1");
  detail::check_finite(diag, "symtridiag_eigen");
  detail::check_finite(offdiag, "symtridiag_eigen");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = offdiag[i - 1];

  EigenResult out;
  if (want == Vectors::full) {
    detail::RotationTarget z{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) z.row(i)[i] = 1.0;
    detail::tql2(d, e, &z);
    detail::sort_ascending(d, &z);
    out.vectors = detail::columns_from_rows(z);
  } else {
    detail::tql2(d, e, nullptr);
    detail::sort_ascending(d, nullptr);
  }
  out.values = std::move(d);
  return out;
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (the Golub-Welsch ingredient).
inline std::pair<std::vector<double>, std::vector<double>> symtridiag_eigen_first_components(
    std::span<const double> diag, std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 != n)
    throw InvalidArgument("symtridiag_eigen_first_components: bad shape");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = offdiag[i - 1];
  detail::RotationTarget z{n, 1, std::vector<double>(n, 0.0)};
  z.w[0] = 1.0;
  detail::tql2(d, e, &z);
  detail::sort_ascending(d, &z);
  return {std::move(d), std::move(z.w)};
}

/// Full symmetric eigenproblem via Householder tridiagonalization + implicit QL.
inline EigenResult sym_eigen(const SymmetricMatrix& a, Vectors want = Vectors::none) {
  const std::size_t n = a.dim();
  if (n == 0) throw InvalidArgument("sym_eigen: empty matrix");

  // at(k, j) == V[k][j] of the textbook routine, stored so that loops over k
  // are contiguous. After accumulation the buffer is directly the rotation target.
  std::vector<double> buf(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double v = a(k, j);
      if (!std::isfinite(v)) throw InvalidArgument("sym_eigen: non-finite entry");
      buf[j * n + k] = v;
    }
  auto at = [&](std::size_t k, std::size_t j) -> double& { return buf[j * n + k]; };

  std::vector<double> d(n), e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) d[j] = at(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = at(i - 1, j);
        at(i, j) = 0.0;
        at(j, i) = 0.0;
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
        at(j, i) = f;
        g = e[j] + at(j, j) * f;
        const double* col = &at(0, j);
        for (std::size_t k = j + 1; k + 1 <= i; ++k) {
          g += col[k] * d[k];
          e[k] += col[k] * f;
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
        double* col = &at(0, j);
        for (std::size_t k = j; k + 1 <= i; ++k) col[k] -= (f * e[k] + g * d[k]);
        d[j] = at(i - 1, j);
        at(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  EigenResult out;
  if (want == Vectors::full) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      at(n - 1, i) = at(i, i);
      at(i, i) = 1.0;
      const double h = d[i + 1];
      if (h != 0.0) {
        const double* next = &at(0, i + 1);
        for (std::size_t k = 0; k <= i; ++k) d[k] = next[k] / h;
        for (std::size_t j = 0; j <= i; ++j) {
          double* col = &at(0, j);
          double g = 0.0;
          for (std::size_t k = 0; k <= i; ++k) g += next[k] * col[k];
          for (std::size_t k = 0; k <= i; ++k) col[k] -= g * d[k];
        }
      }
      for (std::size_t k = 0; k <= i; ++k) at(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = at(n - 1, j);
      at(n - 1, j) = 0.0;
    }
    at(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    detail::RotationTarget z{n, n, std::move(buf)};
    detail::tql2(d, e, &z);
    detail::sort_ascending(d, &z);
    out.vectors = detail::columns_from_rows(z);
  } else {
    for (std::size_t j = 0; j < n; ++j) d[j] = at(j, j);
    e[0] = 0.0;
    detail::tql2(d, e, nullptr);
    detail::sort_ascending(d, nullptr);
  }
  out.values = std::move(d);
  return out;
}

}  // namespace selfrwa
