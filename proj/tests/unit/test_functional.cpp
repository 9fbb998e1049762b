#include <doctest.h>

#include "bilattice/errors.hpp"
#include "bilattice/functional.hpp"

using namespace bilattice;

namespace {

SigmaPoly P(const char* text, const Lattice& lat) { return parse_sigma_poly(text, lat); }

PearsonPair pearson(const char* phi, const char* psi, const Lattice& lat) {
  return {P(phi, lat).even_part(), P(psi, lat).even_part(), lat};
}

bool agree(const MomentFunctional& x, const MomentFunctional& y) {
  const int upto = std::min(x.order(), y.order());
  for (int k = 0; k <= upto; ++k) {
    if (!(x.moment(k) == y.moment(k)) || !(x.twisted_moment(k) == y.twisted_moment(k))) return false;
  }
  return upto >= 0;
}

}  // namespace

TEST_CASE("pairing is linear in both tables") {
  const Lattice lat = make_lattice(parse_scalar("1/3"));
  const MomentFunctional u(lat, {SigmaScalar(1), SigmaScalar(2), SigmaScalar(5)},
                           {SigmaScalar(7), SigmaScalar(-1), SigmaScalar(3)});
  CHECK(pair(u, P("z^2 + s z", lat)) == SigmaScalar(5 - 1));
  CHECK(pair(u, P("3 - 2s", lat)) == SigmaScalar(3 - 14));
  CHECK_THROWS_AS(pair(u, P("z^3", lat)), TruncationError);
}

TEST_CASE("dual operators are transposes on the whole ring") {
  const Lattice lat = make_lattice(parse_scalar("i/2"));
  std::vector<SigmaScalar> m, t;
  for (int k = 0; k <= 8; ++k) {
    m.emplace_back(ExactScalar::rational(k * k - 3, k + 1), ExactScalar::rational(1, k + 2));
    t.emplace_back(ExactScalar::rational(2 * k + 1, 3), ExactScalar(k));
  }
  const MomentFunctional u(lat, m, t);
  const SigmaPoly g = P("z^2 - s z + 2", lat);
  for (const char* text : {"z^5 - 3z", "s z^4 + z", "(1+i) s z^3 - 2"}) {
    const SigmaPoly f = P(text, lat);
    CHECK(pair(dual_D(u), f) == -pair(u, apply_D(f)));
    CHECK(pair(dual_S(u), f) == pair(u, apply_S(f)));
    CHECK(pair(left_mul(g, u), f) == pair(u, g * f));
  }
  CHECK(left_mul(g, u).order() == 6);
}

TEST_CASE("Pearson moments solve the distributional equation") {
  for (const char* g : {"0", "1/3", "i/2"}) {
    const Lattice lat = make_lattice(parse_scalar(g));
    const PearsonPair p = pearson("z^2/2 + z - 1", "2z + 1/3", lat);
    const MomentFunctional u = solve_pearson_moments(p, SigmaScalar(1), 10);
    CHECK(u.is_sigma_linear());
    CHECK(u.moments_sigma_free());
    CHECK(agree(dual_D(left_mul(p.phi_sigma(), u)), dual_S(left_mul(p.psi_sigma(), u))));
  }
}

TEST_CASE("admissibility failure carries the index") {
  const Lattice lat = make_lattice(parse_scalar("1/3"));
  const PearsonPair p = pearson("-z^2/3 + 1", "z", lat);  // d_n = 1 - n/3
  try {
    solve_pearson_moments(p, SigmaScalar(1), 6);
    FAIL("expected AdmissibilityError");
  } catch (const AdmissibilityError& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("Hankel oracle on a fixture with a known table") {
  // phi = z - 2, psi = z: B_n = -2n, C_n = 2n.
  const Lattice lat = make_lattice(parse_scalar("1/3"));
  const MomentFunctional u = solve_pearson_moments(pearson("z - 2", "z", lat), SigmaScalar(1), 13);
  const HankelReport h = hankel_oracle(u, 6);
  REQUIRE(h.regular_up_to == 6);
  for (int n = 0; n <= 6; ++n) CHECK(h.table.B()[n] == ExactScalar(-2 * n));
  for (int n = 1; n <= 6; ++n) CHECK(h.table.C_at(n) == ExactScalar(2 * n));
  CHECK_THROWS_AS(hankel_oracle(u, 7), TruncationError);
}

TEST_CASE("oracle polynomials are orthogonal under the functional") {
  const Lattice lat = make_lattice(parse_scalar("i/2"));
  const MomentFunctional u =
      solve_pearson_moments(pearson("z^2 + 251/144", "3z - 1/3", lat), SigmaScalar(1), 15);
  const HankelReport h = hankel_oracle(u, 7);
  const std::vector<Poly> P_n = generate_ops(h.table);
  for (int n = 0; n <= 7; ++n) {
    for (int m = 0; m <= 7; ++m) {
      const SigmaScalar v = pair(u, SigmaPoly(lat, P_n[n] * P_n[m]));
      if (n == m) {
        CHECK(v == SigmaScalar(h.table.h()[n]));
      } else {
        CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant({{ExactScalar(2), ExactScalar(1)}, {ExactScalar(5), ExactScalar(3)}}) == ExactScalar(1));
  CHECK(determinant({{ExactScalar(0), ExactScalar(1), ExactScalar(2)},
                     {ExactScalar(1), ExactScalar(0), ExactScalar(3)},
                     {ExactScalar(4), ExactScalar(-3), ExactScalar(8)}}) == ExactScalar(-2));
  CHECK(determinant({{ExactScalar(1), ExactScalar(2)}, {ExactScalar(2), ExactScalar(4)}}).is_zero());
}
