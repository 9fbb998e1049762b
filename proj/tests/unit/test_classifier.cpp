#include <doctest.h>

#include "bilattice/classifier.hpp"
#include "bilattice/errors.hpp"
#include "bilattice/functional.hpp"

using namespace bilattice;

namespace {

ExactScalar q(const char* s) { return parse_scalar(s); }

PearsonPair pearson(const char* phi, const char* psi) {
  const Lattice lat = make_lattice(q("1/3"));
  return {parse_sigma_poly(phi, lat).even_part(), parse_sigma_poly(psi, lat).even_part(), lat};
}

}  // namespace

TEST_CASE("the three cases") {
  CHECK(classify(pearson("-3", "z + 2")).kase == ClassCase::DegPhi0);
  CHECK(classify(pearson("z - 2", "z")).kase == ClassCase::DegPhi1);
  CHECK(classify(pearson("z^2 + 89/900", "z - 2/15")).kase == ClassCase::DegPhi2);
  CHECK_THROWS_AS(classify(pearson("z^2 + 1", "3")), MathError);
}

TEST_CASE("normalization divides by d") {
  const Classification c = classify(pearson("2z^2 + 4", "2z - 1"));
  CHECK(c.normalization == ExactScalar(2));
  CHECK(c.a == ExactScalar(1));
  CHECK(c.c == ExactScalar(2));
  CHECK(c.e == q("-1/2"));
}

TEST_CASE("case 3 descriptor is Q up to symmetry, and the shift is -b/(2a)") {
  const Classification c = classify(pearson("z^2 + 2z + 3", "z + 1/2"));
  CHECK(c.descriptor.kind == FamilyKind::Q);
  CHECK(c.map.mu == ExactScalar(-1));
  CHECK(c.map.lambda == ExactScalar(1));
}

TEST_CASE("quartic roots factor phi_4") {
  // a = 1, b = 0, c = -e with both discriminants equal to 1.
  const PearsonPair p = pearson("z^2", "z");
  const auto al = quartic_roots(p);
  CHECK(al[0] == ExactScalar(1));
  CHECK(al[1] == q("1/2"));
  CHECK(al[2] == q("1/2"));
  CHECK(al[3].is_zero());
  const Classification c = classify(p);
  const Poly product = Poly({ExactScalar(4) * al[0], ExactScalar(4)}) * Poly({al[1], ExactScalar(1)}) *
                       Poly({al[2], ExactScalar(1)}) * Poly({al[3], ExactScalar(1)});
  CHECK(product == Poly(phi4_coefficients(p)));
  CHECK(al[2] == ExactScalar(1) - al[1]);
  CHECK(al[3] == (ExactScalar(1) - al[0]) / c.a);
  CHECK(al[2] - c.a * al[3] == al[0] - al[1]);
}

TEST_CASE("case-3 closed forms match the general closed form") {
  const PearsonPair p = pearson("z^2/2 + z - 1", "2z + 1/3");
  const HankelReport h = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), 17), 8);
  for (int n = 0; n < 8; ++n) {
    const auto [B, C] = case3_coefficients(p, n);
    CHECK(B == h.table.B()[n]);
    CHECK(C == h.table.C_at(n + 1));
  }
}

TEST_CASE("two independent extensions fall back to symmetric parameters") {
  // D1 = 2 and D2 = 3.
  const PearsonPair p = pearson("z^2 - 3/8", "z + 1/8");
  const Classification c = classify(p);
  REQUIRE(c.root_status == RootStatus::NeedsTwoExtensions);
  CHECK(c.D1 == ExactScalar(2));
  CHECK(c.D2 == ExactScalar(3));
  CHECK(c.descriptor.has("bc"));
  CHECK_FALSE(c.roots.has_value());
  CHECK_THROWS_AS(quartic_roots(p), MathError);
  const RecurrenceTable direct = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), 11), 5).table;
  CHECK(affine_transform(family_recurrence(c.descriptor, 5), c.map) == direct);
}
