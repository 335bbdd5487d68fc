#include "specnorm/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

namespace specnorm {

namespace floors {

double cosine_nonneg(double K) { return 1.0 / std::sqrt(std::log(K) + 1.0); }
double cosine_signed(double K) { return 1.0 / std::sqrt(2.0 * (std::log(K) + 1.0)); }
double cosine_real_height(double K) {
  return 1.0 / (2.0 * std::sqrt(std::log(2.0 * K * K) + 1.0));
}
double cosine_complex_height(double K) {
  return 1.0 / (2.0 * std::sqrt(4.0 * std::log(2.0 * K) + 2.0));
}

double delta_certified(double spectral, double height) {
  return spectral / (8.0 * std::numbers::sqrt2 * std::sqrt(std::log(height) + 2.0));
}
double delta_sharp(double spectral, double height) {
  return spectral / (4.0 * std::sqrt(4.0 * std::log(12.0 * height * height) + 2.0));
}
double rho_certified(double spectral, double height) {
  return spectral / (32.0 * std::numbers::sqrt2 * (std::log(height) + 4.0));
}

double rho_chain_denominator(double K) {
  const double f = 4.0 * std::sqrt(4.0 * std::log(12.0 * K * K) + 2.0);
  return 2.0 * f * std::sqrt(4.0 * std::log(2.0 * K * f) + 2.0);
}

}  // namespace floors

namespace {

void require_K(double K) {
  if (!(K >= 1.0) || !std::isfinite(K)) {
    fail(ErrorKind::InvalidArgument, "K must be a finite real >= 1");
  }
}

// Index of the best score: maximum value, ties (relative kTieTolerance)
// resolved by `less` on indices.
template <typename Less>
std::size_t select_best(const std::vector<double>& scores, Less less) {
  const double best = *std::max_element(scores.begin(), scores.end());
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (within_tie(scores[i], best) && (!pick || less(i, *pick))) pick = i;
  }
  return *pick;
}

SliceResult slice_by_base(const ComplexMatrix& a, const ComplexVector& x, double base) {
  if (a.is_zero()) fail(ErrorKind::ZeroMatrix, "slicing needs a non-zero matrix");
  if (x.is_zero()) fail(ErrorKind::ZeroVector, "slicing needs a non-zero vector");
  if (x.dim() != a.cols()) fail(ErrorKind::InvalidArgument, "slice vector has the wrong dimension");

  const double log_base = std::log(base);
  std::map<long, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double mag = std::abs(x[i]);
    if (mag == 0.0) continue;
    long k = static_cast<long>(std::floor(std::log(mag) / log_base));
    while (std::pow(base, static_cast<double>(k)) > mag) --k;
    while (std::pow(base, static_cast<double>(k + 1)) <= mag) ++k;
    levels[k].push_back(i);
  }

  std::optional<SliceResult> best;
  for (const auto& [k, members] : levels) {
    std::vector<Complex> part(x.dim());
    for (std::size_t i : members) part[i] = x[i];
    ComplexVector slice(std::move(part));
    const double ratio = a.apply(slice).norm() / slice.norm();
    if (!best || ratio > best->achieved_ratio) {
      best = SliceResult{std::move(slice), base, ratio, 1.0, k};
    }
  }
  best->log_diam = log_diameter(best->slice);
  return std::move(*best);
}

// Superlevel sets {i : p_i >= t} for every distinct positive value t of p,
// plus the truncation set {i : p_i >= ||p||^2 / (2 ||p||_1)}.
void append_part_candidates(const std::vector<double>& part, const std::string& tag,
                            std::vector<BinaryCandidate>& out) {
  const std::size_t n = part.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (part[i] > 0.0) order.push_back(i);
  if (order.empty()) return;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return part[x] > part[y]; });

  BinaryVector running(n);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    running.set(order[pos]);
    const bool group_ends = pos + 1 == order.size() || part[order[pos + 1]] != part[order[pos]];
    if (group_ends) out.push_back({running, tag});
  }

  double sq = 0.0;
  double l1 = 0.0;
  for (std::size_t i : order) {
    sq += part[i] * part[i];
    l1 += part[i];
  }
  const double threshold = sq / (2.0 * l1);
  BinaryVector trunc(n);
  for (std::size_t i : order)
    if (part[i] >= threshold) trunc.set(i);
  if (trunc.popcount() > 0) out.push_back({trunc, tag + "/trunc"});
}

// Sum of z over the support of xi (no conjugation).
Complex support_sum(std::span<const Complex> z, const BinaryVector& xi) {
  Complex acc{};
  for (std::size_t i : xi.indices()) acc += z[i];
  return acc;
}

ComplexVector image_of(const ComplexMatrix& a, const BinaryVector& xi) {
  std::vector<Complex> y(a.rows());
  const auto idx = xi.indices();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    Complex acc{};
    for (std::size_t j : idx) acc += row[j];
    y[i] = acc;
  }
  // Built directly; the entries are finite sums of finite values.
  return ComplexVector(std::move(y));
}

struct DeltaPipeline {
  NormProfile profile;
  SliceResult slice;
  std::vector<BinaryCandidate> family;
  std::vector<double> ratios;
};

DeltaPipeline run_delta_pipeline(const ComplexMatrix& a, const SolverOptions& opts) {
  if (a.is_zero()) fail(ErrorKind::ZeroMatrix, "witness for the zero matrix");
  const TopSingular top = top_two_singular(a, opts);
  DeltaPipeline out{norm_profile(a, top), SliceResult{ComplexVector(1)}, {}, {}};
  const double K = std::max(1.0, out.profile.height);

  out.slice = dyadic_slice(a.adjoint(), top.first.left, K);
  const ComplexVector w = a.apply_adjoint(out.slice.slice);
  out.family = tagged_binary_candidates(w);
  out.ratios.reserve(out.family.size());
  for (const BinaryCandidate& c : out.family) {
    out.ratios.push_back(image_of(a, c.bits).norm() / c.bits.norm());
  }
  return out;
}

std::string format_level(long level) {
  std::ostringstream os;
  os << "slice[" << level << "]";
  return os.str();
}

}  // namespace

SliceResult dyadic_slice(const ComplexMatrix& a, const ComplexVector& x, double K) {
  require_K(K);
  return slice_by_base(a, x, 8.0 * K * K + 1.0);
}

SliceResult hermitian_slice(const ComplexMatrix& a, const ComplexVector& x, double K) {
  if (!a.is_hermitian()) fail(ErrorKind::NotHermitian, "hermitian_slice needs a Hermitian matrix");
  require_K(K);
  return slice_by_base(a, x, 8.0 * K + 1.0);
}

std::vector<BinaryCandidate> tagged_binary_candidates(const ComplexVector& z) {
  if (z.is_zero()) fail(ErrorKind::ZeroVector, "binary candidates of the zero vector");
  const std::size_t n = z.dim();
  std::vector<double> re_pos(n), re_neg(n), im_pos(n), im_neg(n);
  for (std::size_t i = 0; i < n; ++i) {
    re_pos[i] = std::max(z[i].real(), 0.0);
    re_neg[i] = std::max(-z[i].real(), 0.0);
    im_pos[i] = std::max(z[i].imag(), 0.0);
    im_neg[i] = std::max(-z[i].imag(), 0.0);
  }
  std::vector<BinaryCandidate> all;
  append_part_candidates(re_pos, "re+", all);
  append_part_candidates(re_neg, "re-", all);
  append_part_candidates(im_pos, "im+", all);
  append_part_candidates(im_neg, "im-", all);

  std::stable_sort(all.begin(), all.end(), [](const BinaryCandidate& x, const BinaryCandidate& y) {
    return tie_less(x.bits, y.bits);
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const BinaryCandidate& x, const BinaryCandidate& y) {
                          return x.bits == y.bits;
                        }),
            all.end());
  return all;
}

std::vector<BinaryVector> binary_candidates(const ComplexVector& z) {
  std::vector<BinaryVector> out;
  for (BinaryCandidate& c : tagged_binary_candidates(z)) out.push_back(std::move(c.bits));
  return out;
}

BinaryChoice best_binary_cosine(const ComplexVector& z) {
  const std::vector<BinaryVector> family = binary_candidates(z);
  const double znorm = z.norm();
  std::vector<double> scores;
  scores.reserve(family.size());
  for (const BinaryVector& xi : family) {
    scores.push_back(std::abs(support_sum(z.span(), xi)) / (znorm * xi.norm()));
  }
  const std::size_t pick =
      select_best(scores, [&](std::size_t i, std::size_t j) { return tie_less(family[i], family[j]); });
  return {family[pick], scores[pick]};
}

BinaryChoice exact_rank1_binary(const ComplexVector& w) {
  if (w.is_zero()) fail(ErrorKind::ZeroVector, "rank-one binary problem for the zero vector");
  if (!w.is_real(1e-12)) fail(ErrorKind::NotReal, "rank-one binary solver needs a real vector");
  const std::size_t n = w.dim();

  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].real() > 0.0) pos.push_back(i);
    else if (w[i].real() < 0.0) neg.push_back(i);
  }
  auto by_magnitude = [&](std::size_t x, std::size_t y) {
    return std::abs(w[x].real()) > std::abs(w[y].real());
  };
  std::stable_sort(pos.begin(), pos.end(), by_magnitude);
  std::stable_sort(neg.begin(), neg.end(), by_magnitude);

  struct Prefix {
    const std::vector<std::size_t>* side;
    std::size_t length;
  };
  std::vector<Prefix> prefixes;
  std::vector<double> scores;
  for (const auto* side : {&pos, &neg}) {
    double sum = 0.0;
    for (std::size_t k = 0; k < side->size(); ++k) {
      sum += std::abs(w[(*side)[k]].real());
      prefixes.push_back({side, k + 1});
      scores.push_back(sum / std::sqrt(static_cast<double>(k + 1)));
    }
  }

  auto materialize = [&](const Prefix& p) {
    return BinaryVector::from_indices(n, std::span(p.side->data(), p.length));
  };
  const double best = *std::max_element(scores.begin(), scores.end());
  std::optional<BinaryChoice> choice;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!within_tie(scores[i], best)) continue;
    BinaryVector v = materialize(prefixes[i]);
    if (!choice || tie_less(v, choice->xi)) choice = BinaryChoice{std::move(v), scores[i]};
  }
  return std::move(*choice);
}

DeltaWitness delta_witness(const ComplexMatrix& a, const SolverOptions& opts) {
  DeltaPipeline run = run_delta_pipeline(a, opts);
  const std::size_t pick = select_best(run.ratios, [&](std::size_t i, std::size_t j) {
    return tie_less(run.family[i].bits, run.family[j].bits);
  });

  DeltaWitness out;
  out.xi = run.family[pick].bits;
  out.ratio = run.ratios[pick];
  const double h = std::max(1.0, run.profile.height);
  out.floor_thm = floors::delta_certified(run.profile.spectral, h);
  out.floor_sharp = floors::delta_sharp(run.profile.spectral, h);
  out.provenance = format_level(run.slice.level) + "/" + run.family[pick].family;
  out.profile = run.profile;
  out.slice_level = run.slice.level;
  out.family_size = run.family.size();

  if (out.ratio < out.floor_sharp * (1.0 - kFloorSlack)) {
    fail(ErrorKind::InvariantViolation, "delta witness fell below its certified floor");
  }
  return out;
}

RhoWitness rho_witness(const ComplexMatrix& a, const SolverOptions& opts) {
  const DeltaPipeline run = run_delta_pipeline(a, opts);
  const bool real = a.is_real();

  struct Pair {
    std::size_t xi_index;
    BinaryVector eta;
    std::string eta_family;
  };
  std::vector<Pair> pairs;
  std::vector<double> scores;
  for (std::size_t c = 0; c < run.family.size(); ++c) {
    const BinaryVector& xi = run.family[c].bits;
    const ComplexVector v = image_of(a, xi);
    if (v.is_zero()) continue;
    std::vector<BinaryCandidate> etas = tagged_binary_candidates(v);
    if (real) etas.push_back({exact_rank1_binary(v).xi, "rank1"});
    for (BinaryCandidate& eta : etas) {
      scores.push_back(std::abs(support_sum(v.span(), eta.bits)) / (xi.norm() * eta.bits.norm()));
      pairs.push_back({c, std::move(eta.bits), std::move(eta.family)});
    }
  }
  if (pairs.empty()) fail(ErrorKind::InvariantViolation, "rho witness family is empty");

  const std::size_t pick = select_best(scores, [&](std::size_t i, std::size_t j) {
    const BinaryVector& xi_i = run.family[pairs[i].xi_index].bits;
    const BinaryVector& xi_j = run.family[pairs[j].xi_index].bits;
    if (xi_i != xi_j) return tie_less(xi_i, xi_j);
    return tie_less(pairs[i].eta, pairs[j].eta);
  });

  RhoWitness out;
  out.xi = run.family[pairs[pick].xi_index].bits;
  out.eta = pairs[pick].eta;
  out.value = scores[pick];
  out.floor_thm = floors::rho_certified(run.profile.spectral, std::max(1.0, run.profile.height));
  out.provenance = format_level(run.slice.level) + "/" + run.family[pairs[pick].xi_index].family +
                   "|" + pairs[pick].eta_family;
  out.profile = run.profile;

  if (out.value < out.floor_thm * (1.0 - kFloorSlack)) {
    fail(ErrorKind::InvariantViolation, "rho witness fell below its certified floor");
  }
  return out;
}

}  // namespace specnorm
