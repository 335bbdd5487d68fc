#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "specnorm/binary_vector.hpp"
#include "specnorm/matrix.hpp"

namespace specnorm {

struct OracleOptions {
  /// Worker threads; 0 reads SPECNORM_THREADS (unset or 0 = hardware count).
  std::size_t workers = 0;
  /// log2 of the Gray-code block length. Each block reseeds its incremental
  /// state from scratch, so results do not depend on the worker count.
  unsigned block_log2 = 14;
};

struct OracleResult {
  double value = 0.0;
  BinaryVector argmax_xi{1};
  std::optional<BinaryVector> argmax_eta;
  std::uint64_t enumerated = 0;
  /// Largest incremental-state drift seen at block ends, relative to the
  /// largest column (or row) norm of A.
  double drift = 0.0;
  std::string method;  // "gray", "gray+rank1", "gray-pairs"
};

inline constexpr std::size_t kDefaultDeltaCap = 24;
inline constexpr std::size_t kDefaultRhoRealCap = 20;
inline constexpr std::size_t kDefaultRhoPairCap = 26;
inline constexpr std::size_t kDefaultCosineCap = 16;

std::size_t resolve_workers(std::size_t requested);

/// max ||A xi|| / ||xi|| over xi in {0,1}^n \ {0}. Throws CapExceeded if n > cap.
OracleResult exact_delta(const ComplexMatrix& a, std::size_t cap = kDefaultDeltaCap,
                         const OracleOptions& opts = {});

/// max |xi^t A eta| / (||xi|| ||eta||) with xi in {0,1}^m (argmax_xi) and
/// eta in {0,1}^n (argmax_eta). Real A with m <= cap_real takes the
/// Gray-code-plus-rank-one path; otherwise both vectors are enumerated and
/// m + n <= cap_pair is required.
OracleResult exact_rho(const ComplexMatrix& a, std::size_t cap_real = kDefaultRhoRealCap,
                       std::size_t cap_pair = kDefaultRhoPairCap, const OracleOptions& opts = {});

/// The double-enumeration path regardless of A being real.
OracleResult exact_rho_pairs(const ComplexMatrix& a, std::size_t cap_pair = kDefaultRhoPairCap,
                             const OracleOptions& opts = {});

/// max |<z, xi>| / (||z|| ||xi||) by brute force. Throws CapExceeded if dim > cap.
OracleResult exact_cosine(const ComplexVector& z, std::size_t cap = kDefaultCosineCap,
                          const OracleOptions& opts = {});

}  // namespace specnorm
