#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "specnorm/extremal.hpp"
#include "specnorm/graph.hpp"
#include "specnorm/matrix.hpp"

namespace fixtures {

using specnorm::Complex;
using specnorm::ComplexMatrix;
using specnorm::ComplexVector;
using specnorm::Graph;

struct Named {
  std::string name;
  ComplexMatrix a;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Graph::Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Graph::Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

inline Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Union of d/2 random perfect-matching-like cycles: degrees close to d.
inline Graph regularish(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::vector<Graph::Edge> e;
  std::vector<std::size_t> perm(n);
  for (std::size_t round = 0; round < std::max<std::size_t>(1, d / 2); ++round) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t u = perm[i];
      const std::size_t v = perm[(i + 1) % n];
      if (u != v) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

enum class Kind { Nonneg, Signed, Complex, Sparse, Wide };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Nonneg: return "nonneg";
    case Kind::Signed: return "signed";
    case Kind::Complex: return "complex";
    case Kind::Sparse: return "sparse";
    case Kind::Wide: return "wide-range";
  }
  return "?";
}

/// Random non-zero matrix. Wide-range entries span several orders of
/// magnitude so that heights well above 1 occur.
inline ComplexMatrix random_matrix(std::size_t m, std::size_t n, Kind kind, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComplexMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      switch (kind) {
        case Kind::Nonneg: a(i, j) = unit(rng); break;
        case Kind::Signed: a(i, j) = gauss(rng); break;
        case Kind::Complex: a(i, j) = Complex(gauss(rng), gauss(rng)); break;
        case Kind::Sparse: a(i, j) = unit(rng) < 0.2 ? gauss(rng) : 0.0; break;
        case Kind::Wide: a(i, j) = gauss(rng) * std::exp(2.5 * gauss(rng)); break;
      }
    }
  }
  if (a.is_zero()) a(rng() % m, rng() % n) = 1.0;
  return a;
}

/// Exactly Hermitian matrix from a random square one.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  if (h.is_zero()) h(0, 0) = 1.0;
  return h;
}

inline std::vector<Named> named_fixtures() {
  std::vector<Named> out;
  for (std::size_t n : {1, 2, 3, 5}) out.push_back({"I" + std::to_string(n), ComplexMatrix::identity(n)});
  out.push_back({"J3x4", ComplexMatrix::ones(3, 4)});
  out.push_back({"J4x4", ComplexMatrix::ones(4, 4)});
  for (std::size_t n : {4, 8, 12, 16}) out.push_back({"invsqrt" + std::to_string(n), specnorm::gen_invsqrt(n)});
  for (unsigned m = 1; m <= 4; ++m) {
    out.push_back({"A_" + std::to_string(m), *specnorm::gen_tensor_power(m).matrix});
  }
  out.push_back({"K4", specnorm::adjacency(complete_graph(4))});
  out.push_back({"star3", specnorm::adjacency(star_graph(3))});
  out.push_back({"star7", specnorm::adjacency(star_graph(7))});
  out.push_back({"path3", specnorm::adjacency(path_graph(3))});
  out.push_back({"path8", specnorm::adjacency(path_graph(8))});
  out.push_back({"K2,2", specnorm::adjacency(complete_bipartite(2, 2))});
  return out;
}

/// `count` seeded random matrices cycling through all kinds, m, n <= max_dim.
inline std::vector<Named> random_corpus(std::size_t count, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const Kind kinds[] = {Kind::Nonneg, Kind::Signed, Kind::Complex, Kind::Sparse, Kind::Wide};
  std::vector<Named> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Kind kind = kinds[k % 5];
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    out.push_back({std::string(kind_name(kind)) + "#" + std::to_string(k), random_matrix(m, n, kind, rng)});
  }
  return out;
}

inline std::vector<Named> sandwich_corpus() {
  std::vector<Named> out = random_corpus(300, 12, 0xC0FFEE);
  for (Named& f : named_fixtures()) out.push_back(std::move(f));
  return out;
}

inline std::vector<Named> hermitian_corpus() {
  std::mt19937_64 rng(0xBEEF);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  const Kind kinds[] = {Kind::Nonneg, Kind::Signed, Kind::Complex, Kind::Sparse, Kind::Wide};
  std::vector<Named> out;
  for (std::size_t k = 0; k < 150; ++k) {
    const std::size_t n = dim(rng);
    out.push_back({"herm#" + std::to_string(k), hermitian_part(random_matrix(n, n, kinds[k % 5], rng))});
  }
  for (Named& f : named_fixtures()) {
    if (f.a.rows() == f.a.cols() && f.a.is_hermitian()) out.push_back(std::move(f));
  }
  return out;
}

/// Largest eigenvalue of the smaller Gram matrix from its characteristic
/// polynomial; defined for min(m, n) <= 3.
inline double sigma1_charpoly(const ComplexMatrix& a) {
  const bool tall = a.rows() >= a.cols();
  const std::size_t k = tall ? a.cols() : a.rows();
  const std::size_t len = tall ? a.rows() : a.cols();
  if (k > 3) throw std::invalid_argument("sigma1_charpoly needs min(m, n) <= 3");
  auto entry = [&](std::size_t r, std::size_t t) { return tall ? a(t, r) : a(r, t); };
  std::vector<std::vector<Complex>> g(k, std::vector<Complex>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < len; ++t) g[r][s] += std::conj(entry(r, t)) * entry(s, t);

  double lambda = 0.0;
  if (k == 1) {
    lambda = g[0][0].real();
  } else if (k == 2) {
    const double p = g[0][0].real(), q = g[1][1].real();
    lambda = 0.5 * (p + q + std::sqrt((p - q) * (p - q) + 4.0 * std::norm(g[0][1])));
  } else {
    const double c2 = g[0][0].real() + g[1][1].real() + g[2][2].real();
    const double c1 = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).real() +
                      (g[0][0] * g[2][2] - g[0][2] * g[2][0]).real() +
                      (g[1][1] * g[2][2] - g[1][2] * g[2][1]).real();
    const double c0 = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])).real();
    const double s = c2 / 3.0;
    const double p = c1 - 3.0 * s * s;
    const double q = -2.0 * s * s * s + c1 * s - c0;
    double t;
    if (p > -1e-300) {
      t = std::cbrt(-q);
    } else {
      const double r = std::sqrt(-p / 3.0);
      const double arg = std::clamp(3.0 * q / (2.0 * p) / r, -1.0, 1.0);
      t = 2.0 * r * std::cos(std::acos(arg) / 3.0);
    }
    lambda = t + s;
    for (int it = 0; it < 3; ++it) {  // Newton polish
      const double f = ((lambda - c2) * lambda + c1) * lambda - c0;
      const double df = (3.0 * lambda - 2.0 * c2) * lambda + c1;
      if (std::abs(df) < 1e-12 * std::max(1.0, c2 * c2)) break;
      lambda -= f / df;
    }
  }
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace fixtures
