#pragma once

#include <string>
#include <vector>

#include "specnorm/binary_vector.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/matrix.hpp"

namespace specnorm {

/// Certified lower bounds. Natural logarithms throughout.
namespace floors {

double cosine_nonneg(double K);        // 1/sqrt(ln K + 1), nonnegative z with l(z) <= K
double cosine_signed(double K);        // 1/sqrt(2(ln K + 1)), real z with l(z) <= K
double cosine_real_height(double K);   // 1/(2 sqrt(ln(2K^2) + 1)), real z with h(z) <= K
double cosine_complex_height(double K);// 1/(2 sqrt(4 ln(2K) + 2)), complex z with h(z) <= K

double delta_certified(double spectral, double height);  // ||A|| / (8 sqrt2 sqrt(ln h + 2))
double delta_sharp(double spectral, double height);    // ||A|| / (4 sqrt(4 ln(12 h^2) + 2))
double rho_certified(double spectral, double height);    // ||A|| / (32 sqrt2 (ln h + 4))

/// 2 f(K) sqrt(4 ln(2 K f(K)) + 2) with f(K) = 4 sqrt(4 ln(12 K^2) + 2): the
/// exact denominator produced by chaining the bilinear argument.
double rho_chain_denominator(double K);

}  // namespace floors

/// Multiplicative slack applied when checking certified floors.
inline constexpr double kFloorSlack = 1e-6;

struct SliceResult {
  ComplexVector slice;
  double base = 0.0;            // M
  double achieved_ratio = 0.0;  // ||A slice|| / ||slice||
  double log_diam = 1.0;
  long level = 0;               // k with M^k <= |slice_i| < M^(k+1)
};

/// Splits x into magnitude bands [M^k, M^(k+1)) with M = 8K^2 + 1 and returns
/// the band maximizing ||A x^(k)|| / ||x^(k)||. With x the top right singular
/// vector and K >= h(A) the ratio exceeds ||A|| / 2.
SliceResult dyadic_slice(const ComplexMatrix& a, const ComplexVector& x, double K);

/// Hermitian variant: base M = 8K + 1, K >= ||A||_inf / ||A||, x a dominant
/// eigenvector. The returned ratio exceeds ||A|| / 4.
SliceResult hermitian_slice(const ComplexMatrix& a, const ComplexVector& x, double K);

struct BinaryCandidate {
  BinaryVector bits;
  std::string family;  // "re+", "re-", "im+", "im-", or "<part>/trunc"
};

/// Superlevel sets of the four sign parts of z (Re+, Re-, Im+, Im-) plus the
/// half-mean truncation set of each part. Deduplicated, in tie order.
std::vector<BinaryVector> binary_candidates(const ComplexVector& z);
/// Same family, keeping the first family tag that produced each vector.
std::vector<BinaryCandidate> tagged_binary_candidates(const ComplexVector& z);

struct BinaryChoice {
  BinaryVector xi;
  double value = 0.0;
};

/// argmax over binary_candidates(z) of |<z, xi>| / (||z|| ||xi||). Exact over
/// all nonempty binary vectors whenever z is real.
BinaryChoice best_binary_cosine(const ComplexVector& z);

/// Exact max over nonempty binary eta of |<w, eta>| / ||eta|| for real w, by
/// prefix scans of the sorted positive and negative parts.
BinaryChoice exact_rank1_binary(const ComplexVector& w);

struct DeltaWitness {
  BinaryVector xi{1};
  double ratio = 0.0;        // ||A xi|| / ||xi||
  double floor_thm = 0.0;
  double floor_sharp = 0.0;
  std::string provenance;
  NormProfile profile;
  long slice_level = 0;
  std::size_t family_size = 0;
};

/// Constructive lower bound for the discrete norm: slice the top left singular
/// vector, map it back through A^*, and return the best member of the
/// resulting binary candidate family. Throws InvariantViolation if the
/// certified floor is not met.
DeltaWitness delta_witness(const ComplexMatrix& a, const SolverOptions& opts = {});

struct RhoWitness {
  BinaryVector xi{1};   // column side, dimension n
  BinaryVector eta{1};  // row side, dimension m
  double value = 0.0;   // |eta^t A xi| / (||xi|| ||eta||), no conjugation
  double floor_thm = 0.0;
  std::string provenance;
  NormProfile profile;
};

/// Constructive lower bound for the discrete Rayleigh norm, pairing every
/// member of the delta family with the candidates built from its image.
RhoWitness rho_witness(const ComplexMatrix& a, const SolverOptions& opts = {});

}  // namespace specnorm
