#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specnorm {

/// 0/1 vector stored as a bitset with a cached popcount. ||xi|| = sqrt(popcount).
class BinaryVector {
 public:
  explicit BinaryVector(std::size_t dim);

  static BinaryVector from_indices(std::size_t dim, std::span<const std::size_t> indices);
  /// Low `dim` bits of `mask`; dim <= 64.
  static BinaryVector from_mask(std::size_t dim, std::uint64_t mask);
  /// Inverse of to_hex().
  static BinaryVector from_hex(std::size_t dim, std::string_view hex);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t popcount() const noexcept { return popcount_; }
  double norm() const;

  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept;

  std::vector<std::size_t> indices() const;
  /// Low 64 bits as an integer (bit i = coordinate i).
  std::uint64_t low_word() const noexcept { return words_.front(); }

  /// Big-endian hex of sum_i xi_i 2^i, zero-padded to ceil(dim/4) digits.
  std::string to_hex() const;

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  /// Deterministic tie order: smaller popcount first, then the vector whose
  /// first differing coordinate is set (so {0} precedes {1}).
  friend bool tie_less(const BinaryVector& a, const BinaryVector& b) noexcept;

 private:
  std::size_t dim_;
  std::size_t popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Relative tolerance within which two objective values count as tied.
inline constexpr double kTieTolerance = 1e-12;

inline bool within_tie(double value, double best) noexcept {
  return value >= best - kTieTolerance * best;
}

}  // namespace specnorm
