#include <doctest.h>

#include "bilattice/errors.hpp"
#include "bilattice/families.hpp"
#include "bilattice/functional.hpp"

using namespace bilattice;

namespace {
ExactScalar q(const char* s) { return parse_scalar(s); }
}  // namespace

// Reference tables below are the standard monic recurrences of the classical
// discrete families, written out independently of the catalog code. The
// catalog's Meixner and Krawtchouk C_n carry no factor c (resp. p); the H
// identities hold for that normalization only.

TEST_CASE("Charlier table") {
  const ExactScalar a = q("3/2");
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::charlier(a), 8);
  for (int n = 0; n <= 8; ++n) CHECK(t.B()[n] == ExactScalar(n) + a);
  for (int n = 1; n <= 8; ++n) CHECK(t.C_at(n) == ExactScalar(n) * a);
}

TEST_CASE("Meixner table") {
  const ExactScalar beta = q("2"), c = q("1/3");
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::meixner(beta, c), 8);
  const ExactScalar one(1);
  for (int n = 0; n <= 8; ++n) {
    const ExactScalar N(n);
    CHECK(t.B()[n] == (N + (N + beta) * c) / (one - c));
    if (n > 0) CHECK(t.C_at(n) * c == N * (N + beta - one) * c / ((one - c) * (one - c)));
  }
}

TEST_CASE("Krawtchouk table stops at its size") {
  const ExactScalar p = q("1/4");
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::krawtchouk(p, 5), 10);
  CHECK(t.checked_to() == 5);
  const ExactScalar one(1);
  for (int n = 0; n <= 5; ++n) {
    const ExactScalar N(n);
    CHECK(t.B()[n] == p * (ExactScalar(5) - N) + N * (one - p));
    if (n > 0) CHECK(t.C_at(n) * p == N * p * (one - p) * (ExactScalar(5) - N + one));
  }
  CHECK(finite_cutoff(FamilyDescriptor::krawtchouk(p, 5)) == 5);
}

TEST_CASE("H table") {
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::H(q("3"), q("-1")), 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.B()[n] == ExactScalar(-4 * n));
  for (int n = 0; n < 6; ++n) CHECK(t.C_at(n + 1) == ExactScalar((3 * n - 1) * (n + 1)));
  CHECK(h_root(FamilyDescriptor::H(q("-5"), q("1"))) == q("2i"));
  CHECK_THROWS_AS(h_root(FamilyDescriptor::H(q("1"), q("1"))), MathError);
}

TEST_CASE("Q depends on (b, c) only through bc and b^2 + c^2") {
  const SymmetryReport s = q_symmetry_check(q("1/2"), q("1/3"), q("1/5"), 8);
  CHECK(s.identical);
  const RecurrenceTable sym = family_recurrence(FamilyDescriptor::Q_symmetric(q("1/2"), q("1/15"), q("34/225")), 8);
  CHECK(sym == s.tables.front());
  // Literal formula and the invariant form agree wherever both are defined.
  for (int n = 1; n <= 8; ++n) {
    const auto lit = q_coefficients_literal(q("3/2"), q("1/4"), q("2/3"), n);
    const auto inv = family_coefficients(FamilyDescriptor::Q(q("3/2"), q("1/4"), q("2/3")), n);
    CHECK(lit.first == inv.first);
    CHECK(lit.second == inv.second);
  }
}

TEST_CASE("Q with bc = 0 uses the limiting form") {
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::Q(q("3/2"), q("0"), q("1/3")), 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.B()[n].is_zero());
}

TEST_CASE("vanishing C within the horizon") {
  const FamilyDescriptor d = FamilyDescriptor::H(q("-1"), q("3"));
  CHECK(max_valid_index(d, 10) == 3);
  CHECK_THROWS_AS(family_recurrence(d, 5), RegularityError);
  CHECK(family_recurrence(d, 3).checked_to() == 3);
}

TEST_CASE("affine maps") {
  const RecurrenceTable t = family_recurrence(FamilyDescriptor::charlier(q("2")), 6);
  const AffineMap m{q("-1/2"), q("3")};
  CHECK(affine_transform(affine_transform(t, m), m.inverse()) == t);
  const RecurrenceTable u = affine_transform(t, m);
  // P_n(z) = lambda^n Q_n((z - mu)/lambda) keeps orthogonality structure:
  for (int n = 0; n <= 6; ++n) CHECK(u.B()[n] == m.lambda * t.B()[n] + m.mu);
  for (int n = 1; n <= 6; ++n) CHECK(u.C_at(n) == m.lambda * m.lambda * t.C_at(n));
}

TEST_CASE("identities at sample points") {
  std::map<std::string, ExactScalar> charlier = {{"a", q("1")}};
  CHECK(verify_identity("charlier", charlier, 10).passed());
  const IdentityReport m = verify_identity("meixner", {{"beta", q("2")}, {"c", q("1/2")}}, 10);
  CHECK(m.passed());
  REQUIRE(m.signs.size() == 2);
  CHECK(m.signs[0].selected != m.signs[1].selected);
  CHECK(parse_scalar(to_string(m.signs[0].root)) == m.signs[0].root);
  const IdentityReport k = verify_identity("krawtchouk-h", {{"p", q("1/3")}, {"N", q("6")}}, 10);
  CHECK(k.passed());
  CHECK(k.checked_to == 6);
  CHECK(verify_identity("hahn", {{"alpha", q("1")}, {"beta", q("2")}, {"N", q("4")}}, 10).passed());
  CHECK(verify_identity("para-krawtchouk", {{"mu", q("1/2")}, {"N", q("5")}}, 10).passed());
  CHECK_THROWS(verify_identity("unknown", {}, 3));
}

TEST_CASE("a Hahn image with the wrong third parameter does not match") {
  const RecurrenceTable hahn = family_recurrence(FamilyDescriptor::hahn(q("1"), q("2"), 4), 4);
  bool matched = true;
  try {
    const RecurrenceTable wrong = affine_transform(family_recurrence(FamilyDescriptor::Q(q("5/2"), q("-1/2"), q("9/2")), 4),
                                                   {q("1/2"), q("2") - q("-1/4")});
    matched = wrong == hahn;
  } catch (const RegularityError&) {
    matched = false;  // C_3 vanishes for this Q
  }
  CHECK_FALSE(matched);
}

TEST_CASE("Pearson pairs for catalog descriptors reproduce the tables") {
  const Lattice lat = make_lattice(q("1/3"));
  for (const FamilyDescriptor& d : {FamilyDescriptor::H(q("3"), q("-1")), FamilyDescriptor::Q(q("1/2"), q("1/3"), q("1/5"))}) {
    const ExactScalar mu = q("1/7");
    const PearsonPair p = pearson_pair_for(d, lat, mu);
    const RecurrenceTable shifted = affine_transform(family_recurrence(d, 6), {ExactScalar(1), mu});
    const HankelReport h = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), 13), 6);
    CHECK(h.table == shifted);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family_kind("Para-Krawtchouk") == FamilyKind::ParaKrawtchouk);
  CHECK(parse_family_kind("meixner") == FamilyKind::Meixner);
  CHECK(canonical_identity("hahn") == "hahn-q");
  CHECK(identity_names().size() == 5);
  CHECK_THROWS(parse_family_kind("laguerre"));
}
