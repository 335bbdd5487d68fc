#include "specnorm/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace specnorm {

double col_norm(const ComplexMatrix& a) {
  std::vector<double> column(a.rows());
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) column[i] = std::abs(a(i, j));
    best = std::max(best, pairwise_sum(column));
  }
  return best;
}

double row_norm(const ComplexMatrix& a) {
  std::vector<double> row(a.cols());
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = std::abs(a(i, j));
    best = std::max(best, pairwise_sum(row));
  }
  return best;
}

NormProfile norm_profile(const ComplexMatrix& a, const TopSingular& top) {
  NormProfile p;
  p.col_norm = col_norm(a);
  p.row_norm = row_norm(a);
  p.spectral = top.first.value;
  p.spectral_residual = top.first.residual;
  p.iterations = top.iterations;
  p.height = height(a, p);
  return p;
}

NormProfile norm_profile(const ComplexMatrix& a, const SolverOptions& opts) {
  return norm_profile(a, top_two_singular(a, opts));
}

double height(const ComplexMatrix& a, const NormProfile& profile) {
  if (a.is_zero() || !(profile.spectral > 0.0)) {
    fail(ErrorKind::ZeroMatrix, "height is undefined for the zero matrix");
  }
  return std::sqrt(profile.col_norm * profile.row_norm) / profile.spectral;
}

double vector_height(const ComplexVector& z) {
  if (z.is_zero()) fail(ErrorKind::ZeroVector, "height is undefined for the zero vector");
  return std::sqrt(z.norm1() * z.norm_inf()) / z.norm();
}

double log_diameter(const ComplexVector& z) {
  if (z.is_zero()) fail(ErrorKind::ZeroVector, "logarithmic diameter of the zero vector");
  double hi = 0.0;
  double lo = INFINITY;
  for (const Complex& c : z.entries()) {
    const double mag = std::abs(c);
    if (mag == 0.0) continue;
    hi = std::max(hi, mag);
    lo = std::min(lo, mag);
  }
  return hi / lo;
}

ComplexMatrix mean_matrix(const ComplexMatrix& a) {
  const Complex total = pairwise_sum(std::span<const Complex>(a.entries()));
  const Complex mean = total / static_cast<double>(a.rows() * a.cols());
  return ComplexMatrix(a.rows(), a.cols(), std::vector<Complex>(a.rows() * a.cols(), mean));
}

double centered_height_bound(const ComplexMatrix& a, const TopSingular& top, double tol) {
  const double s1 = top.first.value;
  const double s2 = top.second.value;
  if (!(s2 > tol * s1)) {
    fail(ErrorKind::RankDeficient, "second singular value vanishes (rank <= 1)");
  }
  return 2.0 * std::sqrt(col_norm(a) * row_norm(a)) / s2;
}

ComplexVector dominant_eigenvector(const ComplexMatrix& a, const TopSingular& top) {
  if (!a.is_hermitian()) fail(ErrorKind::NotHermitian, "dominant eigenvector needs a Hermitian matrix");
  const double sigma = top.first.value;
  if (!(sigma > 0.0)) fail(ErrorKind::ZeroMatrix, "dominant eigenvector of the zero matrix");
  const ComplexVector& v = top.first.right;
  const ComplexVector av = a.apply(v);
  std::vector<Complex> plus(v.dim());
  std::vector<Complex> minus(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    plus[i] = v[i] + av[i] / sigma;
    minus[i] = v[i] - av[i] / sigma;
  }
  std::vector<Complex>& pick = norm2(plus) >= norm2(minus) ? plus : minus;
  const double nrm = norm2(pick);
  for (Complex& c : pick) c /= nrm;
  return ComplexVector(std::move(pick));
}

}  // namespace specnorm
