#include "doctest.h"

#include <random>

#include "specnorm/io.hpp"
#include "support/fixtures.hpp"

using namespace specnorm;

namespace {

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

TEST_SUITE("cli-io") {

TEST_CASE("matrix text examples") {
  ComplexMatrix a = parse_matrix("2 3\n1 2 3\n4 5 6\n");
  CHECK(a == ComplexMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}));

  a = parse_matrix("# header comment\r\n2 2 # trailing\r\n(1,2) 0\r\n\r\n-1.5e0 (0, -1)\r\n");
  CHECK(a(0, 0) == Complex(1, 2));
  CHECK(a(1, 0) == Complex(-1.5, 0));
  CHECK(a(1, 1) == Complex(0, -1));

  CHECK(format_matrix(ComplexMatrix::from_rows({{1, 1}, {1, 0}})) == "2 2\n1 1\n1 0\n");
  CHECK(format_matrix(parse_matrix("1 2\n(1,-2) -0\n")) == "1 2\n(1,-2) (0,0)\n");
  CHECK(format_matrix(parse_matrix("1 1\n-0\n")) == "1 1\n0\n");
}

TEST_CASE("round trip is exact") {
  std::mt19937_64 rng(13);
  const fixtures::Kind kinds[] = {fixtures::Kind::Signed, fixtures::Kind::Complex, fixtures::Kind::Wide};
  for (int k = 0; k < 60; ++k) {
    const ComplexMatrix a = fixtures::random_matrix(1 + rng() % 8, 1 + rng() % 8, kinds[k % 3], rng);
    const std::string text = format_matrix(a);
    CHECK(parse_matrix(text) == a);
    CHECK(format_matrix(parse_matrix(text)) == text);
  }
}

TEST_CASE("malformed matrix text") {
  CHECK(error_kind([] { parse_matrix(""); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("2\n1 2\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("0 2\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("2 2\n1 2\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 2\n1 2 3\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 1\nabc\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 1\n(1,2\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 1\n(1)\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 1\ninf\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_matrix("1 1\n1e999\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { read_text_file("/nonexistent/matrix.txt"); }) == ErrorKind::ParseError);
}

}  // TEST_SUITE
