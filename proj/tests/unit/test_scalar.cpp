#include <doctest.h>

#include "bilattice/errors.hpp"
#include "bilattice/scalar.hpp"

using namespace bilattice;

namespace {
ExactScalar q(const char* s) { return parse_scalar(s); }
}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK(q("2/3") * q("3/4") == q("1/2"));
  CHECK(q("1") / q("3") * ExactScalar(3) == ExactScalar(1));
  CHECK(to_string(q("6/4")) == "3/2");
}

TEST_CASE("gaussian rationals") {
  const ExactScalar i = ExactScalar::i();
  CHECK(i * i == ExactScalar(-1));
  CHECK(q("(1+i)/(1-i)") == i);
  CHECK(q("1/(2+i)") == q("2/5-1/5i"));
  CHECK(to_string(q("3/4-2/5i")) == "3/4-2/5i");
  CHECK(to_string(q("-i/2")) == "-1/2i");
}

TEST_CASE("text form round-trips") {
  for (const char* s : {"0", "-7", "3/4-2/5i", "i", "-1/2i", "5/3+2i"}) {
    const ExactScalar x = q(s);
    CHECK(q(to_string(x).c_str()) == x);
  }
  const ExactScalar r = q("1/2 + 3 sqrt(-7)");
  CHECK(parse_scalar(to_string(r)) == r);
}

TEST_CASE("sqrt_exact and its branch rule") {
  CHECK(sqrt_exact(GaussianRational(make_rational(9, 4))) == GaussianRational(make_rational(3, 2)));
  CHECK(sqrt_exact(GaussianRational(-4)) == GaussianRational(Rational(0), Rational(2)));
  // (1+2i)^2 = -3+4i; principal root has positive real part.
  CHECK(sqrt_exact(GaussianRational(Rational(-3), Rational(4))) == GaussianRational(Rational(1), Rational(2)));
  CHECK_FALSE(sqrt_exact(GaussianRational(2)).has_value());
  CHECK_FALSE(sqrt_exact(GaussianRational(Rational(0), Rational(1))).has_value());
}

TEST_CASE("quadratic extension arithmetic") {
  const ExtensionHandle ext = make_extension(GaussianRational(-7));
  const ExactScalar r = ExactScalar::root_of(ext);
  CHECK(r * r == ExactScalar(-7));
  const ExactScalar x = ExactScalar(1) + ExactScalar(2) * r;
  CHECK(x * x.inverse() == ExactScalar(1));
  CHECK((x - ExactScalar(2) * r).in_base_field());
  // -7 * 7 = -49 is a square, so sqrt(7) lives in the same field.
  const auto s7 = sqrt_in(ExactScalar(7), ext);
  REQUIRE(s7.has_value());
  CHECK(*s7 * *s7 == ExactScalar(7));
  CHECK_THROWS_AS(make_extension(GaussianRational(4)), MathError);
}

TEST_CASE("mixing extensions is a context error") {
  const ExactScalar a = ExactScalar::root_of(make_extension(GaussianRational(2)));
  const ExactScalar b = ExactScalar::root_of(make_extension(GaussianRational(3)));
  CHECK_THROWS_AS(a + b, ContextMismatch);
}

TEST_CASE("field axioms on a seeded sample") {
  const ExtensionHandle ext = make_extension(GaussianRational(5));
  const ExactScalar r = ExactScalar::root_of(ext);
  std::vector<ExactScalar> xs = {q("1/2"), q("-3+2i"), q("7/5i"), ExactScalar(1) - r, q("2/3") * r + q("i")};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : xs) CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("1/"), ParseError);
  CHECK_THROWS_AS(parse_scalar("z"), ParseError);
  try {
    parse_scalar("3 + * 4");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
