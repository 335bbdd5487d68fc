#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specnorm {

using Complex = std::complex<double>;

/// Pairwise (tree) summation. Error grows as O(log n) rather than O(n).
double pairwise_sum(std::span<const double> values);
Complex pairwise_sum(std::span<const Complex> values);

/// Dense complex vector of dimension >= 1 with finite entries.
class ComplexVector {
 public:
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector from_real(std::span<const double> values);

  std::size_t dim() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) noexcept { return data_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }

  std::span<Complex> span() noexcept { return data_; }
  std::span<const Complex> span() const noexcept { return data_; }
  const std::vector<Complex>& entries() const noexcept { return data_; }

  double norm() const;      // Euclidean
  double norm1() const;     // sum of moduli
  double norm_inf() const;  // max modulus
  bool is_zero() const noexcept;
  bool is_real(double tol = 0.0) const noexcept;

  ComplexVector& operator*=(Complex c) noexcept;
  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> data_;
};

/// <u, v> = sum_i conj(u_i) v_i.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);

/// Dense row-major m x n complex matrix, m, n >= 1, all entries finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Real matrix from nested rows; all rows must have equal length.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix ones(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<Complex>& entries() const noexcept { return data_; }

  /// y = A x
  ComplexVector apply(const ComplexVector& x) const;
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  /// x = A^* y
  ComplexVector apply_adjoint(const ComplexVector& y) const;
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  bool is_zero() const noexcept;
  bool is_real() const noexcept;
  /// Exact check A(i,j) == conj(A(j,i)).
  bool is_hermitian() const noexcept;

  ComplexMatrix& operator*=(Complex c) noexcept;
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Abstract m x n operator, used by the singular solver so large structured
/// matrices never have to be materialized.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual void apply(std::span<const Complex> x, std::span<Complex> y) const = 0;
  virtual void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const = 0;
};

class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(const ComplexMatrix& a) : a_(a) {}
  std::size_t rows() const override { return a_.rows(); }
  std::size_t cols() const override { return a_.cols(); }
  void apply(std::span<const Complex> x, std::span<Complex> y) const override {
    a_.apply(x, y);
  }
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const override {
    a_.apply_adjoint(y, x);
  }

 private:
  const ComplexMatrix& a_;
};

}  // namespace specnorm
