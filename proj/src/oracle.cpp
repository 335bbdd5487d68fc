#include "specnorm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "specnorm/errors.hpp"
#include "specnorm/witness.hpp"

namespace specnorm {

namespace {

constexpr double kMaxDrift = 1e-9;

std::uint64_t gray(std::uint64_t s) noexcept { return s ^ (s >> 1); }

bool mask_tie_less(std::uint64_t a, std::uint64_t b) noexcept {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return (a >> std::countr_zero(diff)) & 1u;
}

struct Key {
  std::uint64_t xi = 0;
  std::optional<BinaryVector> eta;
};

bool key_less(const Key& a, const Key& b) {
  if (a.xi != b.xi) return mask_tie_less(a.xi, b.xi);
  if (a.eta && b.eta) return tie_less(*a.eta, *b.eta);
  return false;
}

template <typename Task>
void run_blocks(std::size_t blocks, std::size_t workers, Task task) {
  workers = std::max<std::size_t>(1, std::min(workers, blocks));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) task(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = blocks * w / workers;
    const std::size_t hi = blocks * (w + 1) / workers;
    pool.emplace_back([&task, lo, hi] {
      for (std::size_t b = lo; b < hi; ++b) task(b);
    });
  }
  for (std::thread& t : pool) t.join();
}

struct ScanOutcome {
  double max_value = 0.0;
  Key best;
  double drift = 0.0;
};

// Two-pass Gray-code scan over `bits` coordinates. Pass one finds the exact
// maximum of the per-block values; pass two picks the tie-order minimum
// among candidates within kTieTolerance of it. Each block restarts its
// walker from a fresh state, which makes the outcome independent of how
// blocks are spread across workers.
template <typename MakeWalker>
ScanOutcome gray_scan(unsigned bits, const OracleOptions& opts, MakeWalker make_walker) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t block = std::uint64_t{1} << std::min(bits, opts.block_log2);
  const std::size_t blocks = static_cast<std::size_t>(total / block);
  const std::size_t workers = resolve_workers(opts.workers);

  std::vector<double> block_max(blocks, -1.0);
  std::vector<double> block_drift(blocks, 0.0);
  run_blocks(blocks, workers, [&](std::size_t b) {
    auto walker = make_walker();
    const std::uint64_t s0 = b * block;
    walker.reset(gray(s0));
    double best = -1.0;
    for (std::uint64_t s = s0; s < s0 + block; ++s) {
      if (s > s0) walker.flip(static_cast<unsigned>(std::countr_zero(s)));
      if (s != 0) best = std::max(best, walker.value());
    }
    block_max[b] = best;
    block_drift[b] = walker.drift(gray(s0 + block - 1));
  });

  ScanOutcome out;
  out.max_value = *std::max_element(block_max.begin(), block_max.end());
  out.drift = *std::max_element(block_drift.begin(), block_drift.end());
  if (out.drift > kMaxDrift) {
    fail(ErrorKind::InvariantViolation, "Gray-code incremental state drifted beyond tolerance");
  }

  std::vector<std::optional<Key>> block_best(blocks);
  run_blocks(blocks, workers, [&](std::size_t b) {
    auto walker = make_walker();
    const std::uint64_t s0 = b * block;
    walker.reset(gray(s0));
    std::optional<Key> best;
    for (std::uint64_t s = s0; s < s0 + block; ++s) {
      if (s > s0) walker.flip(static_cast<unsigned>(std::countr_zero(s)));
      if (s == 0) continue;
      if (best && !mask_tie_less(gray(s), best->xi)) continue;
      if (auto key = walker.tie_candidate(gray(s), out.max_value)) {
        if (!best || key_less(*key, *best)) best = std::move(key);
      }
    }
    block_best[b] = std::move(best);
  });

  std::optional<Key> winner;
  for (auto& candidate : block_best) {
    if (candidate && (!winner || key_less(*candidate, *winner))) winner = std::move(candidate);
  }
  out.best = std::move(*winner);
  return out;
}

double column_scale(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) sq += std::norm(a(i, j));
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

double row_scale(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) best = std::max(best, norm2(a.row(i)));
  return best;
}

// y = A xi maintained column by column.
class DeltaWalker {
 public:
  DeltaWalker(const std::vector<std::vector<Complex>>& columns, double scale)
      : columns_(columns), scale_(scale), y_(columns.front().size()) {}

  void reset(std::uint64_t mask) {
    mask_ = mask;
    fresh_image(mask, y_);
  }

  void flip(unsigned bit) {
    mask_ ^= std::uint64_t{1} << bit;
    const auto& col = columns_[bit];
    if ((mask_ >> bit) & 1u) {
      for (std::size_t i = 0; i < y_.size(); ++i) y_[i] += col[i];
    } else {
      for (std::size_t i = 0; i < y_.size(); ++i) y_[i] -= col[i];
    }
  }

  double value() const {
    double sq = 0.0;
    for (const Complex& c : y_) sq += std::norm(c);
    return std::sqrt(sq / std::popcount(mask_));
  }

  std::optional<Key> tie_candidate(std::uint64_t mask, double best) const {
    if (!within_tie(value(), best)) return std::nullopt;
    return Key{mask, std::nullopt};
  }

  double drift(std::uint64_t mask) const {
    std::vector<Complex> ref(y_.size());
    fresh_image(mask, ref);
    double sq = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) sq += std::norm(ref[i] - y_[i]);
    return scale_ > 0.0 ? std::sqrt(sq) / scale_ : std::sqrt(sq);
  }

 private:
  void fresh_image(std::uint64_t mask, std::vector<Complex>& out) const {
    std::fill(out.begin(), out.end(), Complex{});
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& col = columns_[static_cast<std::size_t>(std::countr_zero(m))];
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += col[i];
    }
  }

  const std::vector<std::vector<Complex>>& columns_;
  double scale_;
  std::vector<Complex> y_;
  std::uint64_t mask_ = 0;
};

// max |sum(w over eta)| / sqrt(|eta|) over nonempty eta, for real w.
double rank1_value(const std::vector<double>& w, std::vector<double>& pos, std::vector<double>& neg) {
  pos.clear();
  neg.clear();
  for (double v : w) {
    if (v > 0.0) pos.push_back(v);
    else if (v < 0.0) neg.push_back(-v);
  }
  double best = 0.0;
  for (auto* side : {&pos, &neg}) {
    std::sort(side->begin(), side->end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t k = 0; k < side->size(); ++k) {
      sum += (*side)[k];
      best = std::max(best, sum / std::sqrt(static_cast<double>(k + 1)));
    }
  }
  return best;
}

// w = A^t xi for real A, eta solved exactly per step by prefix scans.
class RhoRealWalker {
 public:
  RhoRealWalker(const std::vector<std::vector<double>>& rows, double scale)
      : rows_(rows), scale_(scale), w_(rows.front().size()) {}

  void reset(std::uint64_t mask) {
    mask_ = mask;
    fresh(mask, w_);
  }

  void flip(unsigned bit) {
    mask_ ^= std::uint64_t{1} << bit;
    const auto& row = rows_[bit];
    const double sign = ((mask_ >> bit) & 1u) ? 1.0 : -1.0;
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] += sign * row[j];
  }

  double value() {
    return rank1_value(w_, pos_, neg_) / std::sqrt(static_cast<double>(std::popcount(mask_)));
  }

  std::optional<Key> tie_candidate(std::uint64_t mask, double best) {
    if (!within_tie(value(), best)) return std::nullopt;
    std::vector<double> fresh_w(w_.size());
    fresh(mask, fresh_w);
    return Key{mask, exact_rank1_binary(ComplexVector::from_real(fresh_w)).xi};
  }

  double drift(std::uint64_t mask) const {
    std::vector<double> ref(w_.size());
    fresh(mask, ref);
    double sq = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) sq += (ref[j] - w_[j]) * (ref[j] - w_[j]);
    return scale_ > 0.0 ? std::sqrt(sq) / scale_ : std::sqrt(sq);
  }

 private:
  void fresh(std::uint64_t mask, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& row = rows_[static_cast<std::size_t>(std::countr_zero(m))];
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j];
    }
  }

  const std::vector<std::vector<double>>& rows_;
  double scale_;
  std::vector<double> w_;
  std::vector<double> pos_, neg_;
  std::uint64_t mask_ = 0;
};

// Outer walk over xi maintains w = A^t xi; every outer step runs a full
// inner Gray walk over eta maintaining s = <w, eta>.
class RhoPairWalker {
 public:
  RhoPairWalker(const std::vector<std::vector<Complex>>& rows, double scale)
      : rows_(rows), scale_(scale), w_(rows.front().size()) {}

  void reset(std::uint64_t mask) {
    mask_ = mask;
    fresh(mask, w_);
  }

  void flip(unsigned bit) {
    mask_ ^= std::uint64_t{1} << bit;
    const auto& row = rows_[bit];
    if ((mask_ >> bit) & 1u) {
      for (std::size_t j = 0; j < w_.size(); ++j) w_[j] += row[j];
    } else {
      for (std::size_t j = 0; j < w_.size(); ++j) w_[j] -= row[j];
    }
  }

  double value() const {
    double best = 0.0;
    inner_walk([&](std::uint64_t, double v) { best = std::max(best, v); });
    return best;
  }

  std::optional<Key> tie_candidate(std::uint64_t mask, double best) const {
    std::optional<std::uint64_t> eta;
    inner_walk([&](std::uint64_t e, double v) {
      if (within_tie(v, best) && (!eta || mask_tie_less(e, *eta))) eta = e;
    });
    if (!eta) return std::nullopt;
    return Key{mask, BinaryVector::from_mask(w_.size(), *eta)};
  }

  double drift(std::uint64_t mask) const {
    std::vector<Complex> ref(w_.size());
    fresh(mask, ref);
    double sq = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) sq += std::norm(ref[j] - w_[j]);
    return scale_ > 0.0 ? std::sqrt(sq) / scale_ : std::sqrt(sq);
  }

 private:
  template <typename Visit>
  void inner_walk(Visit visit) const {
    const double inv_k = 1.0 / std::popcount(mask_);
    const std::uint64_t total = std::uint64_t{1} << w_.size();
    Complex s{};
    std::uint64_t eta = 0;
    for (std::uint64_t t = 1; t < total; ++t) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(t));
      eta ^= std::uint64_t{1} << bit;
      if ((eta >> bit) & 1u) s += w_[bit];
      else s -= w_[bit];
      visit(eta, std::sqrt(std::norm(s) * inv_k / std::popcount(eta)));
    }
  }

  void fresh(std::uint64_t mask, std::vector<Complex>& out) const {
    std::fill(out.begin(), out.end(), Complex{});
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& row = rows_[static_cast<std::size_t>(std::countr_zero(m))];
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j];
    }
  }

  const std::vector<std::vector<Complex>>& rows_;
  double scale_;
  std::vector<Complex> w_;
  std::uint64_t mask_ = 0;
};

double evaluate_delta(const ComplexMatrix& a, const BinaryVector& xi) {
  std::vector<Complex> y(a.rows());
  const auto idx = xi.indices();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j : idx) y[i] += a(i, j);
  return norm2(y) / xi.norm();
}

// |xi^t A eta| / (||xi|| ||eta||), xi over rows, eta over columns.
double evaluate_rho(const ComplexMatrix& a, const BinaryVector& xi, const BinaryVector& eta) {
  Complex s{};
  const auto cols = eta.indices();
  for (std::size_t i : xi.indices())
    for (std::size_t j : cols) s += a(i, j);
  return std::abs(s) / (xi.norm() * eta.norm());
}

void require_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    fail(ErrorKind::CapExceeded, std::string(what) + ": " + std::to_string(size) +
                                     " exceeds the enumeration cap " + std::to_string(cap));
  }
  if (size > 62) fail(ErrorKind::CapExceeded, std::string(what) + ": enumeration beyond 2^62");
}

}  // namespace

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPECNORM_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

OracleResult exact_delta(const ComplexMatrix& a, std::size_t cap, const OracleOptions& opts) {
  const std::size_t n = a.cols();
  require_cap(n, cap, "exact_delta columns");
  std::vector<std::vector<Complex>> columns(n, std::vector<Complex>(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = a(i, j);
  const double scale = column_scale(a);

  const ScanOutcome scan = gray_scan(static_cast<unsigned>(n), opts,
                                     [&] { return DeltaWalker(columns, scale); });
  OracleResult out;
  out.argmax_xi = BinaryVector::from_mask(n, scan.best.xi);
  out.value = evaluate_delta(a, out.argmax_xi);
  out.enumerated = (std::uint64_t{1} << n) - 1;
  out.drift = scan.drift;
  out.method = "gray";
  return out;
}

OracleResult exact_rho_pairs(const ComplexMatrix& a, std::size_t cap_pair, const OracleOptions& opts) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  require_cap(m + n, cap_pair, "exact_rho rows+cols");
  std::vector<std::vector<Complex>> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i].assign(a.row(i).begin(), a.row(i).end());
  const double scale = row_scale(a);

  const ScanOutcome scan = gray_scan(static_cast<unsigned>(m), opts,
                                     [&] { return RhoPairWalker(rows, scale); });
  OracleResult out;
  out.argmax_xi = BinaryVector::from_mask(m, scan.best.xi);
  out.argmax_eta = *scan.best.eta;
  out.value = evaluate_rho(a, out.argmax_xi, *out.argmax_eta);
  out.enumerated = ((std::uint64_t{1} << m) - 1) * ((std::uint64_t{1} << n) - 1);
  out.drift = scan.drift;
  out.method = "gray-pairs";
  return out;
}

OracleResult exact_rho(const ComplexMatrix& a, std::size_t cap_real, std::size_t cap_pair,
                       const OracleOptions& opts) {
  const std::size_t m = a.rows();
  if (!a.is_real() || m > cap_real) {
    if (a.is_real() && m + a.cols() > cap_pair) require_cap(m, cap_real, "exact_rho rows");
    return exact_rho_pairs(a, cap_pair, opts);
  }
  std::vector<std::vector<double>> rows(m, std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).real();
  const double scale = row_scale(a);

  const ScanOutcome scan = gray_scan(static_cast<unsigned>(m), opts,
                                     [&] { return RhoRealWalker(rows, scale); });
  OracleResult out;
  out.argmax_xi = BinaryVector::from_mask(m, scan.best.xi);
  out.argmax_eta = *scan.best.eta;
  out.value = evaluate_rho(a, out.argmax_xi, *out.argmax_eta);
  out.enumerated = (std::uint64_t{1} << m) - 1;
  out.drift = scan.drift;
  out.method = "gray+rank1";
  return out;
}

OracleResult exact_cosine(const ComplexVector& z, std::size_t cap, const OracleOptions& opts) {
  require_cap(z.dim(), cap, "exact_cosine dimension");
  if (z.is_zero()) fail(ErrorKind::ZeroVector, "cosine with the zero vector");
  const ComplexMatrix row(1, z.dim(), z.entries());
  OracleResult out = exact_delta(row, cap, opts);
  out.value /= z.norm();
  return out;
}

}  // namespace specnorm
