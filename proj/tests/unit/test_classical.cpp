#include <doctest.h>

#include "bilattice/checks.hpp"
#include "bilattice/classical.hpp"
#include "bilattice/errors.hpp"
#include "bilattice/functional.hpp"

using namespace bilattice;
using checks::fixture_pair;

namespace {

PearsonPair pearson(const char* phi, const char* psi, const char* gamma = "1/3") {
  const Lattice lat = make_lattice(parse_scalar(gamma));
  return {parse_sigma_poly(phi, lat).even_part(), parse_sigma_poly(psi, lat).even_part(), lat};
}

bool agree(const MomentFunctional& x, const MomentFunctional& y) {
  const int upto = std::min(x.order(), y.order());
  for (int k = 0; k <= upto; ++k) {
    if (!(x.moment(k) == y.moment(k)) || !(x.twisted_moment(k) == y.twisted_moment(k))) return false;
  }
  return upto >= 0;
}

}  // namespace

TEST_CASE("closed form on the H fixture") {
  const RecurrenceTable t = recurrence_coeffs(pearson("z - 2", "z"), 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.B()[n] == ExactScalar(-2 * n));
  for (int n = 1; n <= 6; ++n) CHECK(t.C_at(n) == ExactScalar(2 * n));
}

TEST_CASE("closed form equals the Hankel oracle on every fixture") {
  for (const auto& g : checks::gamma_grid()) {
    const Lattice lat = make_lattice(parse_scalar(g));
    for (const auto& fx : checks::regular_fixtures()) {
      CAPTURE(fx.name);
      CAPTURE(g);
      const PearsonPair p = fixture_pair(fx, lat);
      const HankelReport h = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), 13), 6);
      CHECK(h.regular_up_to == 6);
      CHECK(h.table == recurrence_coeffs(p, 6));
    }
  }
}

TEST_CASE("verdicts and their descriptions") {
  CHECK(regular(pearson("z - 2", "z"), 5).describe() == "regular for n <= 5");
  CHECK(regular(pearson("z", "z", "0"), 3).describe() == "condition 2 fails at n=0");
  const RegularityVerdict v = regular(pearson("-z^2/3 + 1", "z"), 5);
  CHECK(v.describe() == "condition 1 fails at n=1 (d_3 = 0)");
  CHECK(v.d_index == 3);
  for (const auto& ff : checks::failing_fixtures()) {
    const RegularityVerdict w = regular(fixture_pair(ff.pair, make_lattice(parse_scalar("i/2"))), 8);
    CAPTURE(ff.pair.name);
    CHECK_FALSE(w.ok);
    CHECK(w.failing_n == ff.failing_n);
    CHECK(w.condition == ff.condition);
  }
}

TEST_CASE("regularity failures raise with the index") {
  try {
    recurrence_coeffs(pearson("2z + 8", "z + 1"), 5);
    FAIL("expected RegularityError");
  } catch (const RegularityError& e) {
    CHECK(e.index() == 2);
  }
  // Rows up to the failing n are still available.
  CHECK(recurrence_coeffs(pearson("2z + 8", "z + 1"), 2).checked_to() == 2);
  CHECK_THROWS_AS(recurrence_coeffs(pearson("-z^2/3 + 1", "z"), 3), AdmissibilityError);
}

TEST_CASE("iterated pairs: closed form and recursion") {
  const PearsonPair p = pearson("z^2/2 + z - 1", "2z + 1/3", "i/2");
  for (int k = 0; k <= 8; ++k) {
    const IteratedPair a = iterated_pair(p, k);
    const IteratedPair b = iterated_pair_recursive(p, k);
    CHECK(a.phi == b.phi);
    CHECK(a.psi == b.psi);
    CHECK(apply_S(apply_S(a.psi)) == a.psi);
  }
}

TEST_CASE("derived functionals satisfy the iterated Pearson equation") {
  const PearsonPair p = pearson("z^2 + 251/144", "3z - 1/3", "1/3");
  const MomentFunctional u = solve_pearson_moments(p, SigmaScalar(1), 16);
  MomentFunctional uk = u;
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    const IteratedPair ip = iterated_pair(p, k);
    CHECK(agree(dual_D(left_mul(ip.phi, uk)), dual_S(left_mul(ip.psi, uk))));
    const MomentFunctional next = derived_functional(u, p, k + 1);
    CHECK(agree(dual_D(next), -1 * left_mul(ip.psi, uk)));
    uk = next;
  }
}

TEST_CASE("Rodrigues data") {
  for (const char* g : {"0", "1/3", "i/2"}) {
    const PearsonPair p = pearson("z^2 + 89/900", "z - 2/15", g);
    const RodriguesData r = rodrigues(p, 6);
    CHECK(r.a[0] == -p.d());
    CHECK(r.s[0] == p.e());
    CHECK(r.R[1] == -p.psi());
    for (int n = 1; n <= 6; ++n) {
      // The sigma shift inside phi^[n-1] cancels against the evaluation point.
      const ExactScalar reduced = p.phi()(-p.e_n(n - 1) / p.d_n(2 * n - 2)) + ExactScalar(n - 1) * p.d_n(n - 1);
      CHECK(r.t[n - 1] == r.a[n] * ExactScalar(n) * p.d_n(2 * n - 2) / p.d_n(2 * n - 1) * reduced);
    }
    const RodriguesCheck c = rodrigues_check(p, 5, 5);
    CHECK(c.ok);
  }
}

TEST_CASE("derivative polynomials are monic of the right degree") {
  const PearsonPair p = pearson("z - 2", "z", "1/3");
  const DerivativeOps ops = derivative_ops(recurrence_coeffs(p, 8), p.lattice(), 1, 6);
  REQUIRE(ops.polys.size() == 7);
  for (int n = 0; n <= 6; ++n) {
    CHECK(ops.polys[n].degree() == n);
    CHECK(ops.polys[n].coeff(static_cast<std::size_t>(n)) == SigmaScalar(1));
  }
  CHECK_FALSE(ops.sigma_free);
  CHECK(derivative_ops(recurrence_coeffs(p.with_lattice(make_lattice(ExactScalar{})), 8), make_lattice(ExactScalar{}), 1,
                       6)
            .sigma_free);
}
