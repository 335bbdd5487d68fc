#include "specnorm/binary_vector.hpp"

#include <bit>
#include <cmath>

#include "specnorm/errors.hpp"

namespace specnorm {

BinaryVector::BinaryVector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64) {
  if (dim == 0) fail(ErrorKind::InvalidArgument, "binary vector dimension must be positive");
}

BinaryVector BinaryVector::from_indices(std::size_t dim, std::span<const std::size_t> indices) {
  BinaryVector v(dim);
  for (std::size_t i : indices) {
    if (i >= dim) fail(ErrorKind::OutOfRange, "binary vector index out of range");
    v.set(i);
  }
  return v;
}

BinaryVector BinaryVector::from_mask(std::size_t dim, std::uint64_t mask) {
  if (dim > 64) fail(ErrorKind::InvalidArgument, "from_mask supports at most 64 coordinates");
  BinaryVector v(dim);
  if (dim < 64) mask &= (std::uint64_t{1} << dim) - 1;
  v.words_[0] = mask;
  v.popcount_ = static_cast<std::size_t>(std::popcount(mask));
  return v;
}

BinaryVector BinaryVector::from_hex(std::size_t dim, std::string_view hex) {
  BinaryVector v(dim);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char ch = *it;
    unsigned nibble;
    if (ch >= '0' && ch <= '9') nibble = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') nibble = static_cast<unsigned>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') nibble = static_cast<unsigned>(ch - 'A' + 10);
    else fail(ErrorKind::ParseError, "invalid hex digit in bit string");
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      if (bit + b >= dim) fail(ErrorKind::ParseError, "bit string longer than dimension");
      v.set(bit + b);
    }
  }
  return v;
}

double BinaryVector::norm() const { return std::sqrt(static_cast<double>(popcount_)); }

void BinaryVector::set(std::size_t i, bool value) noexcept {
  if (test(i) != value) flip(i);
}

void BinaryVector::flip(std::size_t i) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  std::uint64_t& word = words_[i / 64];
  if (word & mask) --popcount_;
  else ++popcount_;
  word ^= mask;
}

std::vector<std::size_t> BinaryVector::indices() const {
  std::vector<std::size_t> out;
  out.reserve(popcount_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string BinaryVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (dim_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if (i < dim_ && test(i)) nibble |= 1u << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

bool tie_less(const BinaryVector& a, const BinaryVector& b) noexcept {
  if (a.popcount_ != b.popcount_) return a.popcount_ < b.popcount_;
  const std::size_t words = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) return (a.words_[w] >> std::countr_zero(diff)) & 1u;
  }
  return a.dim_ < b.dim_;
}

}  // namespace specnorm
