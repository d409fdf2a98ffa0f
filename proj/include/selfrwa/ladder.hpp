#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "selfrwa/errors.hpp"
#include "selfrwa/matrix.hpp"

namespace selfrwa {

/// Truncated Fock-space representation of the oscillator with frequency
/// omega (hbar = m = 1). Immutable after construction.
///
/// The truncation breaks [a, a_dag] = 1 in the last diagonal slot only:
/// (a a_dag - a_dag a)(dim-1, dim-1) = -(dim-1). Callers comparing against
/// exact algebra should stay clear of that corner.
class LadderRep {
 public:
  LadderRep(std::size_t dim, double omega) : dim_(dim), omega_(omega) {
    if (dim < 2) throw InvalidArgument("build_ladder: dim must be >= 2");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("build_ladder: omega must be > 0");

    a_ = DenseMatrix<double>(dim);
    n_op_ = DenseMatrix<double>(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) a_(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
    for (std::size_t i = 0; i < dim; ++i) n_op_(i, i) = static_cast<double>(i);
    a_dag_ = a_.transpose();

    const double xs = 1.0 / std::sqrt(2.0 * omega);
    const double ps = std::sqrt(omega / 2.0);
    x_op_ = DenseMatrix<double>(dim);
    p_op_ = DenseMatrix<std::complex<double>>(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      const double s = a_(i, i + 1);
      x_op_(i, i + 1) = xs * s;
      x_op_(i + 1, i) = xs * s;
      // p = i sqrt(omega/2) (a_dag - a)
      p_op_(i + 1, i) = {0.0, ps * s};
      p_op_(i, i + 1) = {0.0, -ps * s};
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  double omega() const noexcept { return omega_; }
  const DenseMatrix<double>& a() const noexcept { return a_; }
  const DenseMatrix<double>& a_dag() const noexcept { return a_dag_; }
  const DenseMatrix<double>& n_op() const noexcept { return n_op_; }
  const DenseMatrix<double>& x_op() const noexcept { return x_op_; }
  const DenseMatrix<std::complex<double>>& p_op() const noexcept { return p_op_; }

 private:
  std::size_t dim_;
  double omega_;
  DenseMatrix<double> a_, a_dag_, n_op_, x_op_;
  DenseMatrix<std::complex<double>> p_op_;
};

inline LadderRep build_ladder(std::size_t dim, double omega) { return LadderRep(dim, omega); }

}  // namespace selfrwa
