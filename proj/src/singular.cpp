#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "specnorm/linalg.hpp"

namespace specnorm {

namespace {

// Two reported vectors plus guard vectors.
constexpr std::size_t kBlockWidth = 8;
constexpr int kJacobiSweeps = 60;

using Column = std::vector<Complex>;
using Block = std::vector<Column>;

class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}
  Column column(std::size_t dim) {
    Column c(dim);
    for (Complex& v : c) v = Complex(normal_(rng_), normal_(rng_));
    return c;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

void axpy(Complex alpha, const Column& x, Column& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(Column& x, double s) {
  for (Complex& v : x) v *= s;
}

// Modified Gram-Schmidt with reorthogonalization. Columns that collapse (the
// operator annihilated them) are replaced by fresh random directions.
void orthonormalize(Block& block, GaussianSource& source) {
  for (std::size_t c = 0; c < block.size(); ++c) {
    for (int attempt = 0;; ++attempt) {
      const double before = norm2(block[c]);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < c; ++k) axpy(-inner(block[k], block[c]), block[k], block[c]);
      }
      const double after = norm2(block[c]);
      if (after > 1e-10 * before && after > 0.0 && std::isfinite(after)) {
        scale(block[c], 1.0 / after);
        break;
      }
      if (attempt > 8) fail(ErrorKind::NonConvergence, "orthonormalization failed repeatedly");
      block[c] = source.column(block[c].size());
    }
  }
}

struct HermitianEigen {
  std::vector<double> values;   // descending
  std::vector<Complex> vectors; // p x p row-major, eigenvectors in columns
};

// Cyclic complex Jacobi. Each rotation is a phase change making the pivot
// real followed by a real Givens rotation.
HermitianEigen jacobi_eigen(std::vector<Complex> h, std::size_t p) {
  auto at = [p](std::vector<Complex>& m, std::size_t r, std::size_t c) -> Complex& {
    return m[r * p + c];
  };
  std::vector<Complex> q(p * p);
  for (std::size_t i = 0; i < p; ++i) at(q, i, i) = 1.0;

  double total = 0.0;
  for (const Complex& v : h) total += std::norm(v);

  for (int sweep = 0; sweep < kJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c)
        if (r != c) off += std::norm(at(h, r, c));
    if (off <= 1e-30 * total || off == 0.0) break;

    for (std::size_t a = 0; a + 1 < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        const Complex g = at(h, a, b);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const Complex phase = std::conj(g) / mag;  // e^{-i arg g}
        const double tau = (at(h, b, b).real() - at(h, a, a).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const Complex uaa = cs;
        const Complex uba = -sn * phase;
        const Complex uab = sn;
        const Complex ubb = cs * phase;

        for (std::size_t r = 0; r < p; ++r) {  // H <- H U
          const Complex ha = at(h, r, a);
          const Complex hb = at(h, r, b);
          at(h, r, a) = ha * uaa + hb * uba;
          at(h, r, b) = ha * uab + hb * ubb;
        }
        for (std::size_t c = 0; c < p; ++c) {  // H <- U^* H
          const Complex ha = at(h, a, c);
          const Complex hb = at(h, b, c);
          at(h, a, c) = std::conj(uaa) * ha + std::conj(uba) * hb;
          at(h, b, c) = std::conj(uab) * ha + std::conj(ubb) * hb;
        }
        for (std::size_t r = 0; r < p; ++r) {  // Q <- Q U
          const Complex qa = at(q, r, a);
          const Complex qb = at(q, r, b);
          at(q, r, a) = qa * uaa + qb * uba;
          at(q, r, b) = qa * uab + qb * ubb;
        }
      }
    }
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return at(h, x, x).real() > at(h, y, y).real();
  });
  HermitianEigen out;
  out.values.resize(p);
  out.vectors.resize(p * p);
  for (std::size_t c = 0; c < p; ++c) {
    out.values[c] = at(h, order[c], order[c]).real();
    for (std::size_t r = 0; r < p; ++r) out.vectors[r * p + c] = at(q, r, order[c]);
  }
  return out;
}

Block rotate(const Block& block, const std::vector<Complex>& q, std::size_t p) {
  Block out(p, Column(block.front().size()));
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t k = 0; k < p; ++k) axpy(q[k * p + c], block[k], out[c]);
  return out;
}

// Unit vector orthogonal to `against`, used as the left vector when the
// second singular value vanishes.
Column orthogonal_unit(const Column& against) {
  const std::size_t m = against.size();
  for (std::size_t k = 0; k < m; ++k) {
    Column e(m);
    e[k] = 1.0;
    axpy(-inner(against, e), against, e);
    const double nrm = norm2(e);
    if (nrm > 0.5) {
      scale(e, 1.0 / nrm);
      return e;
    }
  }
  return against;
}

SingularPair make_pair(const Column& v, const Column& w, const Column& z, double sigma1) {
  SingularPair pair;
  const double sigma = norm2(w);
  pair.value = sigma;
  pair.right = ComplexVector(v);
  Column u = w;
  if (sigma > 0.0) {
    scale(u, 1.0 / sigma);
  } else {
    u = Column(w.size());
    u[0] = 1.0;
  }
  pair.left = ComplexVector(u);

  Column eig_res = z;
  axpy(-sigma * sigma, v, eig_res);
  Column map_res = w;
  axpy(-sigma, u, map_res);
  pair.residual = std::max(sigma1 > 0.0 ? norm2(eig_res) / sigma1 : 0.0, norm2(map_res));
  return pair;
}

}  // namespace

TopSingular top_two_singular(const LinearOperator& op, const SolverOptions& opts) {
  if (!(opts.tol > 0.0)) fail(ErrorKind::InvalidArgument, "solver tolerance must be positive");
  const std::size_t n = op.cols();
  const std::size_t m = op.rows();
  const std::size_t p = std::min(n, kBlockWidth);

  GaussianSource source(opts.seed);
  Block v(p);
  for (Column& c : v) c = source.column(n);
  orthonormalize(v, source);

  Block w(p, Column(m));
  Block z(p, Column(n));
  TopSingular result;

  for (std::size_t it = 1; it <= std::max<std::size_t>(opts.max_iter, 1); ++it) {
    for (std::size_t c = 0; c < p; ++c) op.apply(v[c], w[c]);

    std::vector<Complex> gram(p * p);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) gram[a * p + b] = inner(w[a], w[b]);
    const HermitianEigen eig = jacobi_eigen(std::move(gram), p);
    v = rotate(v, eig.vectors, p);
    w = rotate(w, eig.vectors, p);
    for (std::size_t c = 0; c < p; ++c) op.apply_adjoint(w[c], z[c]);

    const double sigma1 = norm2(w[0]);
    if (sigma1 == 0.0) fail(ErrorKind::ZeroMatrix, "singular values of the zero operator");

    result.first = make_pair(v[0], w[0], z[0], sigma1);
    if (p >= 2) {
      result.second = make_pair(v[1], w[1], z[1], sigma1);
      if (result.second.value <= 1e-13 * sigma1) {
        result.second.left = ComplexVector(orthogonal_unit(result.first.left.entries()));
        result.second.residual = std::max(result.second.residual, 2.0 * result.second.value);
      }
    } else {
      // One column: sigma_2 is zero by convention and no second right vector
      // exists. The placeholder repeats the first one with its true residual.
      result.second.value = 0.0;
      result.second.right = result.first.right;
      result.second.left = ComplexVector(orthogonal_unit(result.first.left.entries()));
      result.second.residual = sigma1;
    }
    result.iterations = it;

    const double target = opts.tol * sigma1;
    if (result.first.residual <= target && (p < 2 || result.second.residual <= target)) return result;

    v = z;
    orthonormalize(v, source);
  }
  throw NonConvergenceError("subspace iteration did not reach the residual target", result);
}

TopSingular top_two_singular(const ComplexMatrix& a, const SolverOptions& opts) {
  if (a.is_zero()) fail(ErrorKind::ZeroMatrix, "singular values of the zero matrix");
  return top_two_singular(DenseOperator(a), opts);
}

}  // namespace specnorm
