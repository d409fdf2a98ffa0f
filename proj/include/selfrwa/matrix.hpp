#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "selfrwa/errors.hpp"

namespace selfrwa {

/// Dense row-major square matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{}) {}

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t i, std::size_t j) noexcept {
    assert(i < dim_ && j < dim_);
    return data_[i * dim_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const noexcept {
    assert(i < dim_ && j < dim_);
    return data_[i * dim_ + j];
  }

  std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * dim_, dim_}; }

  std::span<const T> data() const noexcept { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.dim_ == b.dim_);
    DenseMatrix r(a.dim_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.dim_ == b.dim_);
    DenseMatrix r(a.dim_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend DenseMatrix operator*(const T& s, DenseMatrix m) {
    for (auto& v : m.data_) v *= s;
    return m;
  }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.dim_ == b.dim_);
    const std::size_t n = a.dim_;
    DenseMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

/// Real symmetric matrix. Only the lower triangle is stored; (i,j) and (j,i)
/// alias the same slot, so symmetry holds exactly.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim) : dim_(dim), packed_(dim * (dim + 1) / 2, 0.0) {}

  /// Symmetrizes `m` as (m + m^T)/2.
  static SymmetricMatrix from_dense(const DenseMatrix<double>& m) {
    SymmetricMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j <= i; ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
    return s;
  }

  std::size_t dim() const noexcept { return dim_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return packed_[index(i, j)]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return packed_[index(i, j)]; }

  DenseMatrix<double> to_dense() const {
    DenseMatrix<double> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) d(i, j) = (*this)(i, j);
    return d;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = (*this)(i, j);
        s += (i == j ? 1.0 : 2.0) * v * v;
      }
    return std::sqrt(s);
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    assert(i < dim_ && j < dim_);
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t dim_ = 0;
  std::vector<double> packed_;
};

}  // namespace selfrwa
