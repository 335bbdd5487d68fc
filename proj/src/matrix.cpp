#include "specnorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specnorm/errors.hpp"

namespace specnorm {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

template <typename T>
T pairwise_sum_impl(const T* first, std::size_t n) {
  if (n <= kPairwiseBlock) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += first[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(first, half) + pairwise_sum_impl(first + half, n - half);
}

bool finite(Complex c) noexcept { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
  for (const Complex& c : values) {
    if (!finite(c)) fail(ErrorKind::InvalidArgument, std::string(what) + " has a non-finite entry");
  }
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

Complex pairwise_sum(std::span<const Complex> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {
  if (dim == 0) fail(ErrorKind::InvalidArgument, "vector dimension must be positive");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  if (data_.empty()) fail(ErrorKind::InvalidArgument, "vector dimension must be positive");
  require_finite(data_, "vector");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

ComplexVector ComplexVector::from_real(std::span<const double> values) {
  return ComplexVector(std::vector<Complex>(values.begin(), values.end()));
}

double ComplexVector::norm() const { return norm2(data_); }

double ComplexVector::norm1() const {
  std::vector<double> mods(data_.size());
  std::transform(data_.begin(), data_.end(), mods.begin(), [](Complex c) { return std::abs(c); });
  return pairwise_sum(mods);
}

double ComplexVector::norm_inf() const {
  double best = 0.0;
  for (const Complex& c : data_) best = std::max(best, std::abs(c));
  return best;
}

bool ComplexVector::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Complex c) { return c == Complex{}; });
}

bool ComplexVector::is_real(double tol) const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [tol](Complex c) { return std::abs(c.imag()) <= tol; });
}

ComplexVector& ComplexVector::operator*=(Complex c) noexcept {
  for (Complex& v : data_) v *= c;
  return *this;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm2(std::span<const Complex> v) {
  std::vector<double> sq(v.size());
  std::transform(v.begin(), v.end(), sq.begin(), [](Complex c) { return std::norm(c); });
  return std::sqrt(pairwise_sum(sq));
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    fail(ErrorKind::InvalidArgument, "matrix entry count does not match its shape");
  }
  require_finite(data_, "matrix");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(m * n);
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return ComplexMatrix(m, n, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
  return a;
}

ComplexMatrix ComplexMatrix::ones(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols, Complex{1.0, 0.0}));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix a(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) a(i, i) = diag[i];
  return a;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& x) const {
  if (x.dim() != cols_) fail(ErrorKind::InvalidArgument, "apply: dimension mismatch");
  ComplexVector y(rows_);
  apply(x.span(), y.span());
  return y;
}

void ComplexMatrix::apply(std::span<const Complex> x, std::span<Complex> y) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    const Complex* r = data_.data() + i * cols_;
    Complex acc{};
    for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

ComplexVector ComplexMatrix::apply_adjoint(const ComplexVector& y) const {
  if (y.dim() != rows_) fail(ErrorKind::InvalidArgument, "apply_adjoint: dimension mismatch");
  ComplexVector x(cols_);
  apply_adjoint(y.span(), x.span());
  return x;
}

void ComplexMatrix::apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const {
  std::fill(x.begin(), x.end(), Complex{});
  for (std::size_t i = 0; i < rows_; ++i) {
    const Complex* r = data_.data() + i * cols_;
    const Complex yi = y[i];
    for (std::size_t j = 0; j < cols_; ++j) x[j] += std::conj(r[j]) * yi;
  }
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool ComplexMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Complex c) { return c == Complex{}; });
}

bool ComplexMatrix::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Complex c) { return c.imag() == 0.0; });
}

bool ComplexMatrix::is_hermitian() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != std::conj((*this)(j, i))) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex c) noexcept {
  for (Complex& v : data_) v *= c;
  return *this;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    fail(ErrorKind::InvalidArgument, "matrix difference: shape mismatch");
  }
  ComplexMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

}  // namespace specnorm
