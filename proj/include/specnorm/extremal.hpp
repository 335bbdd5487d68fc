#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specnorm/binary_vector.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/matrix.hpp"
#include "specnorm/oracle.hpp"

namespace specnorm {

using BigInt = boost::multiprecision::cpp_int;

/// Golden ratio.
inline constexpr double kPhi = 1.6180339887498948482;

// ---------------------------------------------------------------- invsqrt

/// Largest n for which gen_invsqrt materializes the dense matrix.
inline constexpr std::size_t kInvsqrtDenseCap = 2048;
/// Largest n accepted by the closed-form certificate.
inline constexpr std::size_t kInvsqrtCertificateCap = std::size_t{1} << 20;

/// A = x x^t with x_i = 1/sqrt(i), i = 1..n. Requires 4 <= n <= kInvsqrtDenseCap.
ComplexMatrix gen_invsqrt(std::size_t n);

struct InvsqrtCertificate {
  std::size_t n = 0;
  double spectral = 0.0;   // sum 1/i
  double col_norm = 0.0;   // sum i^{-1/2}; equals row_norm
  double height = 0.0;
  double delta = 0.0;      // exact ||A||_Delta = ||x|| * max_xi <x, xi>/||xi||
  BinaryVector delta_xi{1};
  double rho = 0.0;        // exact ||A||_P = (max_xi <x, xi>/||xi||)^2
  double delta_bound = 0.0;  // 2 ||A|| / sqrt(ln h)
  double rho_bound = 0.0;    // 4 ||A|| / ln h
  bool delta_sharp() const { return delta < delta_bound; }
  bool rho_sharp() const { return rho < rho_bound; }
};

/// Exact rank-one quantities of gen_invsqrt(n) without building the matrix.
InvsqrtCertificate invsqrt_certificate(std::size_t n);

// ---------------------------------------------------------- tensor powers

inline constexpr unsigned kTensorMaxM = 24;
/// Dense materialization limit (order 2^10).
inline constexpr unsigned kTensorDenseCap = 10;
/// Spectral verification through the structured operator is run up to here.
inline constexpr unsigned kTensorVerifyCap = 16;

/// [[1,1],[1,0]]^{(x) m} applied by m successive 2x2 contractions.
class TensorPowerOperator final : public LinearOperator {
 public:
  explicit TensorPowerOperator(unsigned m);
  unsigned m() const noexcept { return m_; }
  std::size_t rows() const override { return std::size_t{1} << m_; }
  std::size_t cols() const override { return std::size_t{1} << m_; }
  void apply(std::span<const Complex> x, std::span<Complex> y) const override;
  // Real symmetric, so the adjoint is the operator itself.
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const override {
    apply(y, x);
  }

 private:
  unsigned m_;
};

/// Entry (u, v) of A_m: 1 iff u AND v == 0, loop at the zero vector kept.
constexpr bool tensor_entry(std::uint64_t u, std::uint64_t v) noexcept { return (u & v) == 0; }

struct TensorPowerMatrix {
  unsigned m = 0;
  double phi_power = 0.0;                 // phi^m
  std::optional<ComplexMatrix> matrix;    // present for m <= kTensorDenseCap
  std::optional<double> spectral;         // solver value, for m <= kTensorVerifyCap
  std::optional<double> spectral_residual;
};

/// Builds A_m for 1 <= m <= kTensorMaxM (OutOfRange otherwise).
TensorPowerMatrix gen_tensor_power(unsigned m, const SolverOptions& opts = {});

struct GammaDegreeLaw {
  unsigned m = 0;
  bool law_holds = false;        // |N(v)| == 2^{m - |v|} for all v
  std::uint64_t max_degree = 0;  // Delta(Gamma_m), loop included
  std::uint64_t degree_sum = 0;  // sum_v |N(v)|
  std::uint64_t energy = 0;      // sum_v |N(v)|^2, i.e. full-set neighborhood energy
  std::uint64_t edge_pairs = 0;  // e(V, V) = sum_v |N(v)|
};

/// Direct bitmask count over {0,1}^m, m <= 12.
GammaDegreeLaw gamma_degree_law(unsigned m);

struct KneserAudit {
  unsigned m = 0;
  double phi_power = 0.0;
  double spectral = 0.0;
  OracleResult exact_delta;
  OracleResult exact_rho;
  double witness_delta = 0.0;
  double witness_rho = 0.0;
  double r_delta = 0.0;    // ||A_m||_Delta m^{1/4} / phi^m
  double r_rho = 0.0;      // ||A_m||_P sqrt(m) / phi^m
  double full_delta = 0.0; // ||A_m 1|| / ||1|| = sqrt(5^m / 2^m)
  double full_rho = 0.0;   // 1^t A_m 1 / 2^m = 3^m / 2^m
  double tau_max_scaled = 0.0;
};

/// Exact discrete norms of A_m through the oracle; CapExceeded past the caps.
KneserAudit kneser_norm_audit(unsigned m, std::size_t delta_cap = kDefaultDeltaCap,
                              std::size_t rho_real_cap = kDefaultRhoRealCap,
                              const SolverOptions& opts = {}, const OracleOptions& oracle = {});

// ------------------------------------------------------------ combinatorics

inline constexpr unsigned kTauMaxM = 3000;

/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Nearest long double to v (64-bit mantissa, truncated).
long double to_long_double(const BigInt& v);

/// tau_m(j) = sum_{i=0}^{m-j} C(m-i, j) C(m-j, i), 0 <= j <= m <= kTauMaxM.
BigInt tau(unsigned m, unsigned j);

struct TauTable {
  unsigned m = 0;
  std::vector<BigInt> values;  // j = 0..m
  unsigned argmax = 0;
  double max_scaled = 0.0;     // max_j tau_m(j) sqrt(m) / phi^{2m}
};

TauTable tau_max_scan(unsigned m);

/// max_j tau_m(j) sqrt(m) / phi^{2m} from a long double term recurrence.
double tau_max_scaled(unsigned m);

/// tau_max_scaled for m = 1..m_max, index 0 holding m = 1.
std::vector<double> tau_scaled_series(unsigned m_max, std::size_t workers = 0);

struct SphereEnergy {
  unsigned m = 0;
  unsigned r = 0;
  std::uint64_t energy = 0;       // sum_v |N_{S_r}(v)|^2 by direct count
  std::uint64_t sphere_size = 0;  // |S_r| = C(m, r)
  std::uint64_t rhs = 0;          // sum_i C(m-i, r) C(m-r, i)
  /// lhs = energy / sphere_size as an exact rational.
  bool equal() const { return energy == rhs * sphere_size; }
  double lhs() const { return static_cast<double>(energy) / static_cast<double>(sphere_size); }
};

/// Requires r <= m <= 14.
SphereEnergy sphere_energy_identity(unsigned m, unsigned r);

// ------------------------------------------------------------------ entropy

/// H(z) = -z ln z - (1-z) ln(1-z), H(0) = H(1) = 0.
double entropy(double z);
double entropy_prime(double z);
double entropy_second(double z);
/// (1-x) H(y/(1-x)) + (1-y) H(x/(1-y)) on x, y >= 0, x + y <= 1.
double entropy_f(double x, double y);

struct EntropyAnalysis {
  double x0 = 0.0;    // (5 - sqrt5) / 10
  double z0 = 0.0;    // 2 - phi
  double fmax = 0.0;  // 2 ln phi
  double f_at_x0 = 0.0;
  double h_prime_z0 = 0.0;
  double h_second_max = 0.0;  // max of H'' over interior grid points of [0,1]
  double grid_margin = 0.0;   // max_grid f - (2 ln phi - (2/3)(x - x0)^2)
  double margin_x = 0.0;
  double margin_y = 0.0;
  std::size_t grid_nodes = 0;
  std::size_t concavity_violations = 0;  // positive axis second differences
  double grid_step = 0.0;
};

/// Requires 0 < step <= 1e-2.
EntropyAnalysis entropy_analysis(double step = 1e-3);

struct BinomialTail {
  unsigned m = 0;
  unsigned k = 0;
  long double lower = 0;    // e^{m H(k/m)} / sqrt(2m)
  long double central = 0;  // C(m, k)
  long double value = 0;    // sum_{i<=k} C(m, i)
  long double upper = 0;    // e^{m H(k/m)}
  bool holds = false;       // lower <= central <= value <= upper, 1e-12 relative slack
};

/// Requires 1 <= m <= kTauMaxM and k <= m/2.
BinomialTail binomial_tail_check(unsigned m, unsigned k);

}  // namespace specnorm
