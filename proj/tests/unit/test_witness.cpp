#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "specnorm/extremal.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/witness.hpp"
#include "support/fixtures.hpp"

using namespace specnorm;

namespace {

BinaryVector bits(std::size_t dim, std::initializer_list<std::size_t> idx) {
  const std::vector<std::size_t> v(idx);
  return BinaryVector::from_indices(dim, v);
}

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_SUITE("discrete-witness") {

TEST_CASE("binary vector basics and tie order") {
  const BinaryVector a = bits(5, {0, 3});
  CHECK(a.popcount() == 2);
  CHECK(a.norm() == doctest::Approx(std::sqrt(2.0)));
  CHECK(a.to_hex() == "09");
  CHECK(BinaryVector::from_hex(5, "09") == a);
  CHECK(tie_less(bits(3, {0}), bits(3, {1})));
  CHECK(tie_less(bits(3, {2}), bits(3, {0, 1})));
  CHECK_FALSE(tie_less(bits(3, {1}), bits(3, {1})));
  CHECK(bits(70, {69}).to_hex().size() == 18);
}

TEST_CASE("dyadic slice examples") {
  SliceResult s = dyadic_slice(ComplexMatrix::identity(2), ComplexVector{1, 0}, 1.0);
  CHECK(s.slice == ComplexVector{1, 0});
  CHECK(s.achieved_ratio == doctest::Approx(1.0));

  const ComplexMatrix j = ComplexMatrix::ones(4, 4);
  s = dyadic_slice(j, ComplexVector{0.25, 0.25, 0.25, 0.25}, 1.0);
  CHECK(s.slice == ComplexVector{0.25, 0.25, 0.25, 0.25});
  CHECK(s.achieved_ratio == doctest::Approx(4.0));

  const ComplexMatrix inv = gen_invsqrt(8);
  const TopSingular top = top_two_singular(inv);
  const NormProfile p = norm_profile(inv, top);
  s = dyadic_slice(inv, top.first.right, p.height);
  CHECK(s.achieved_ratio > 0.5 * p.spectral);
  CHECK(s.log_diam < 8 * p.height * p.height + 1);
  CHECK(error_kind([&] { dyadic_slice(inv, top.first.right, 0.5); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { dyadic_slice(inv, ComplexVector(8), 1.0); }) == ErrorKind::ZeroVector);
}

TEST_CASE("hermitian slice examples") {
  const double d[] = {1.0, 1.0};
  SliceResult s = hermitian_slice(ComplexMatrix::diagonal(d), ComplexVector{1, 0}, 1.0);
  CHECK(s.achieved_ratio == doctest::Approx(1.0));

  const ComplexMatrix k4 = adjacency(fixtures::complete_graph(4));
  s = hermitian_slice(k4, ComplexVector{0.5, 0.5, 0.5, 0.5}, 1.0);
  CHECK(s.slice == ComplexVector{0.5, 0.5, 0.5, 0.5});
  CHECK(s.achieved_ratio == doctest::Approx(3.0));

  const ComplexMatrix inv = gen_invsqrt(8);
  const TopSingular top = top_two_singular(inv);
  const double K = std::max(1.0, row_norm(inv) / top.first.value);
  s = hermitian_slice(inv, dominant_eigenvector(inv, top), K);
  CHECK(s.achieved_ratio > 0.25 * top.first.value);
  CHECK(s.log_diam < 8 * K + 1);

  CHECK(error_kind([] { hermitian_slice(ComplexMatrix::from_rows({{0, 1}, {2, 0}}), ComplexVector{1, 0}, 1.0); }) ==
        ErrorKind::NotHermitian);
}

TEST_CASE("binary candidate families") {
  auto fam = binary_candidates(ComplexVector{1, 1, 1});
  REQUIRE(fam.size() == 1);
  CHECK(fam[0] == bits(3, {0, 1, 2}));

  fam = binary_candidates(ComplexVector{2, -1});
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == bits(2, {0}));
  CHECK(fam[1] == bits(2, {1}));

  fam = binary_candidates(ComplexVector{Complex(1, 0), Complex(0, 1)});
  CHECK(std::find(fam.begin(), fam.end(), bits(2, {0})) != fam.end());
  CHECK(std::find(fam.begin(), fam.end(), bits(2, {1})) != fam.end());

  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 40;
    const ComplexMatrix z = fixtures::random_matrix(n, 1, fixtures::Kind::Complex, rng);
    std::vector<Complex> e(z.entries());
    CHECK(binary_candidates(ComplexVector(e)).size() <= 4 * (n + 1));
  }
  CHECK(error_kind([] { binary_candidates(ComplexVector(3)); }) == ErrorKind::ZeroVector);
}

TEST_CASE("candidates never cover coordinates outside their part") {
  const ComplexVector z{Complex(3, 0), Complex(-1, 2), Complex(0, 0), Complex(0.5, -4)};
  for (const BinaryCandidate& c : tagged_binary_candidates(z)) {
    for (std::size_t i : c.bits.indices()) {
      const std::string part = c.family.substr(0, 3);
      if (part == "re+") CHECK(z[i].real() > 0);
      if (part == "re-") CHECK(z[i].real() < 0);
      if (part == "im+") CHECK(z[i].imag() > 0);
      if (part == "im-") CHECK(z[i].imag() < 0);
    }
  }
}

TEST_CASE("best binary cosine examples") {
  BinaryChoice c = best_binary_cosine(ComplexVector{1, 1, 1, 1});
  CHECK(c.xi == bits(4, {0, 1, 2, 3}));
  CHECK(c.value == doctest::Approx(1.0));

  c = best_binary_cosine(ComplexVector{1, -1});
  CHECK(c.xi == bits(2, {0}));
  CHECK(c.value == doctest::Approx(1 / std::sqrt(2.0)));

  c = best_binary_cosine(ComplexVector{3, -1, 2});
  CHECK(c.xi == bits(3, {0, 2}));
  CHECK(c.value == doctest::Approx(5.0 / (std::sqrt(14.0) * std::sqrt(2.0))));
  CHECK(c.value == doctest::Approx(0.9449).epsilon(1e-4));
}

TEST_CASE("exact rank-one binary solver") {
  BinaryChoice c = exact_rank1_binary(ComplexVector{3, -1, 2});
  CHECK(c.xi == bits(3, {0, 2}));
  CHECK(c.value == doctest::Approx(5.0 / std::sqrt(2.0)));
  c = exact_rank1_binary(ComplexVector{1, 1, 1, 1, 1, 1});
  CHECK(c.xi.popcount() == 6);
  CHECK(c.value == doctest::Approx(std::sqrt(6.0)));
  c = exact_rank1_binary(ComplexVector{-5});
  CHECK(c.value == doctest::Approx(5.0));
  CHECK(error_kind([] { exact_rank1_binary(ComplexVector{Complex(1, 1e-6)}); }) == ErrorKind::NotReal);
  CHECK(error_kind([] { exact_rank1_binary(ComplexVector(2)); }) == ErrorKind::ZeroVector);
}

TEST_CASE("best binary cosine is exact on real vectors") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 14;
    std::vector<double> z(n);
    for (double& v : z) v = k % 3 == 0 ? std::round(g(rng) * 2) : g(rng);
    if (std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; })) z[0] = 1.0;
    const ComplexVector zv = ComplexVector::from_real(z);
    const BinaryChoice c = best_binary_cosine(zv);
    const OracleResult o = exact_cosine(zv, 16, {1, 14});
    CHECK(c.value == doctest::Approx(o.value).epsilon(1e-12));
    CHECK(c.xi == o.argmax_xi);
  }
}

TEST_CASE("delta witness examples") {
  DeltaWitness w = delta_witness(ComplexMatrix::identity(3));
  CHECK(w.xi.popcount() == 1);
  CHECK(w.ratio == doctest::Approx(1.0));
  CHECK(w.floor_thm == doctest::Approx(1.0 / 16.0));

  w = delta_witness(ComplexMatrix::ones(4, 4));
  CHECK(w.xi.popcount() == 4);
  CHECK(w.ratio == doctest::Approx(4.0));
  CHECK(w.floor_thm == doctest::Approx(0.25));

  const ComplexMatrix inv = gen_invsqrt(16);
  w = delta_witness(inv);
  const OracleResult o = exact_delta(inv);
  CHECK(w.ratio >= w.floor_thm);
  CHECK(w.ratio <= o.value * (1 + 1e-12));
  CHECK(w.floor_sharp >= w.floor_thm * (1 - 1e-9));
  CHECK(w.provenance.rfind("slice[", 0) == 0);
  CHECK(error_kind([] { delta_witness(ComplexMatrix(2, 2)); }) == ErrorKind::ZeroMatrix);
}

TEST_CASE("rho witness examples") {
  RhoWitness w = rho_witness(ComplexMatrix::ones(3, 5));
  CHECK(w.value == doctest::Approx(std::sqrt(15.0)));
  CHECK(w.xi.popcount() == 5);
  CHECK(w.eta.popcount() == 3);

  w = rho_witness(ComplexMatrix::identity(2));
  CHECK(w.value == doctest::Approx(1.0));
  CHECK(w.xi == w.eta);
  CHECK(w.floor_thm == doctest::Approx(1.0 / (32 * std::numbers::sqrt2 * 4)));
  CHECK(w.floor_thm == doctest::Approx(0.00552).epsilon(1e-3));

  const ComplexMatrix inv = gen_invsqrt(16);
  w = rho_witness(inv);
  const double h = w.profile.height;
  CHECK(w.value >= w.floor_thm);
  CHECK(w.value < 4 * w.profile.spectral / std::log(h));
  CHECK(w.value <= exact_rho(inv).value * (1 + 1e-12));
}

TEST_CASE("delta witness argmax is scale invariant") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const ComplexMatrix a = fixtures::random_matrix(1 + k % 8, 1 + (k * 3) % 10, fixtures::Kind::Signed, rng);
    ComplexMatrix b = a;
    const double c = 0.001 + 10.0 * (k % 4);
    b *= c;
    const DeltaWitness wa = delta_witness(a);
    const DeltaWitness wb = delta_witness(b);
    CHECK(wa.xi == wb.xi);
    CHECK(wb.ratio == doctest::Approx(c * wa.ratio).epsilon(1e-9));
  }
}

TEST_CASE("cosine floors are ordered and the chain denominator stays below its closed form") {
  for (double K = 1.0; K <= 1e12; K *= 1.05) {
    CHECK(floors::cosine_signed(K) <= floors::cosine_nonneg(K));
    CHECK(floors::rho_chain_denominator(K) < 32 * std::numbers::sqrt2 * (std::log(K) + 4));
    CHECK(floors::delta_sharp(1.0, K) >= floors::delta_certified(1.0, K) * (1 - 1e-9));
  }
}

}  // TEST_SUITE
