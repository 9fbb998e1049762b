#include <doctest.h>

#include "bilattice/errors.hpp"
#include "bilattice/sigma_ring.hpp"

using namespace bilattice;

namespace {

/// f at the lattice point s: even(x(s)) + (-1)^s odd(x(s)).
ExactScalar at_point(const SigmaPoly& f, long s) {
  const long sign = s % 2 == 0 ? 1 : -1;
  const ExactScalar x = ExactScalar(s) + f.gamma() * ExactScalar(1 + sign);
  return f.even_part()(x) + ExactScalar(sign) * f.odd_part()(x);
}

SigmaPoly P(const char* text, const Lattice& lat) { return parse_sigma_poly(text, lat); }

}  // namespace

TEST_CASE("D and S agree with lattice differences at sample points") {
  for (const char* g : {"0", "1/3", "i/2", "-2/5"}) {
    const Lattice lat = make_lattice(parse_scalar(g));
    for (const char* text : {"z^3 - 2z + 1", "s z^2 + 3", "(2+i) z^4 - s z", "s"}) {
      const SigmaPoly f = P(text, lat);
      const SigmaPoly Df = apply_D(f);
      const SigmaPoly Sf = apply_S(f);
      for (long s = -3; s <= 4; ++s) {
        const ExactScalar up = at_point(f, s + 1);
        const ExactScalar down = at_point(f, s - 1);
        CHECK(at_point(Df, s) == (up - down) / ExactScalar(2));
        CHECK(at_point(Sf, s) == (up + down) / ExactScalar(2));
      }
    }
  }
}

TEST_CASE("low-degree images") {
  const Lattice lat = make_lattice(parse_scalar("1/3"));
  CHECK(apply_D(P("z", lat)) == P("1", lat));
  CHECK(apply_S(P("z", lat)) == P("z - 2/3 s", lat));
  CHECK(apply_D(P("z^2", lat)) == P("2z - 4/3 s", lat));
  CHECK(apply_S(P("z^2", lat)) == P("z^2 - 4/3 s z + 4/9 + 1", lat));
  CHECK(apply_S(P("s", lat)) == P("-s", lat));
  CHECK(apply_D(P("s", lat)).is_zero());
}

TEST_CASE("D lowers degree by one and S keeps it") {
  const Lattice lat = make_lattice(parse_scalar("i/2"));
  for (unsigned n = 1; n <= 12; ++n) {
    const SigmaPoly zn = SigmaPoly::monomial(lat, n);
    CHECK(apply_D(zn).degree() == static_cast<int>(n) - 1);
    CHECK(apply_S(zn).degree() == static_cast<int>(n));
  }
}

TEST_CASE("Leibniz coefficients follow their recursion") {
  const Lattice lat = make_lattice(parse_scalar("2/7"));
  const SigmaPoly f = P("3z^2 - z + 5", lat);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(leibniz_T(n, k, f) == apply_S(leibniz_T(n - 1, k, f)) + apply_D(leibniz_T(n - 1, k - 1, f)));
    }
  }
  CHECK(leibniz_T(0, 0, f) == f);
  CHECK(leibniz_T(3, 4, f).is_zero());
  CHECK(leibniz_T(3, -1, f).is_zero());
}

TEST_CASE("sigma scalars") {
  const SigmaScalar s = SigmaScalar::sigma();
  CHECK(s * s == SigmaScalar(1));
  const SigmaScalar u(ExactScalar(2), ExactScalar(1));
  CHECK(u * (SigmaScalar(1) / u) == SigmaScalar(1));
  CHECK_THROWS_AS(SigmaScalar(1) / SigmaScalar(ExactScalar(1), ExactScalar(1)), DivisionByZero);
}

TEST_CASE("lattice mismatch is rejected") {
  const Lattice a = make_lattice(parse_scalar("1/3"));
  const Lattice b = make_lattice(parse_scalar("1/5"));
  CHECK_THROWS_AS(P("z", a) + P("z", b), ContextMismatch);
  CHECK(same_lattice(a, make_lattice(parse_scalar("1/3"))));
}

TEST_CASE("parser") {
  const Lattice lat = make_lattice(ExactScalar{});
  CHECK(P("2z", lat) == P("z + z", lat));
  CHECK(P("(z+1)^2", lat) == P("z^2 + 2z + 1", lat));
  CHECK(P("z/2", lat) == P("1/2 z", lat));
  CHECK_THROWS_AS(P("1/z", lat), ParseError);
  CHECK_THROWS_AS(P("z^", lat), ParseError);
  CHECK_THROWS_AS(P("(z", lat), ParseError);
  CHECK(to_string(P("s z - 1", lat)) == to_string(P("-1 + s*z", lat)));
}
