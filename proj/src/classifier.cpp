#include "bilattice/classifier.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

namespace {

struct Normalized {
  ExactScalar d, a, b, c, e;
};

Normalized normalize(const PearsonPair& pair) {
  if (pair.psi().degree() != 1) {
    throw MathError("psi must have degree exactly 1 to classify (deg psi = " + std::to_string(pair.psi().degree()) +
                    ")");
  }
  const ExactScalar d = pair.d();
  return {d, pair.a() / d, pair.b() / d, pair.c() / d, pair.e() / d};
}

struct Roots {
  RootStatus status;
  std::optional<ExactScalar> s1, s2;
};

Roots roots_of(const ExactScalar& D1, const ExactScalar& D2) {
  auto e1 = sqrt_exact(D1.base());
  auto e2 = sqrt_exact(D2.base());
  if (e1 && e2) return {RootStatus::Exact, ExactScalar(*e1), ExactScalar(*e2)};
  if (e1) {
    const ExtensionHandle ext = make_extension(D2.base());
    return {RootStatus::OneExtension, ExactScalar(*e1), ExactScalar::root_of(ext)};
  }
  const ExtensionHandle ext = make_extension(D1.base());
  const ExactScalar s1 = ExactScalar::root_of(ext);
  if (e2) return {RootStatus::OneExtension, s1, ExactScalar(*e2)};
  if (auto s2 = sqrt_in(D2, ext)) return {RootStatus::OneExtension, s1, *s2};
  return {RootStatus::NeedsTwoExtensions, std::nullopt, std::nullopt};
}

}  // namespace

std::string to_string(ClassCase c) {
  switch (c) {
    case ClassCase::DegPhi0:
      return "DegPhi0";
    case ClassCase::DegPhi1:
      return "DegPhi1";
    case ClassCase::DegPhi2:
      return "DegPhi2";
  }
  return "?";
}

std::string to_string(RootStatus s) {
  switch (s) {
    case RootStatus::NotNeeded:
      return "NotNeeded";
    case RootStatus::Exact:
      return "Exact";
    case RootStatus::OneExtension:
      return "OneExtension";
    case RootStatus::NeedsTwoExtensions:
      return "NeedsTwoExtensions";
  }
  return "?";
}

std::vector<ExactScalar> phi4_coefficients(const PearsonPair& pair) {
  const Normalized p = normalize(pair);
  const ExactScalar& a = p.a;
  const ExactScalar& b = p.b;
  const ExactScalar& c = p.c;
  const ExactScalar& e = p.e;
  const ExactScalar four(4);
  return {c - b * e + a * e * e, ExactScalar(1) - b * b + four * a * c, a * (ExactScalar(5) + four * a * c - b * b),
          ExactScalar(8) * a * a, four * a * a * a};
}

Classification classify(const PearsonPair& pair) {
  const Normalized p = normalize(pair);
  Classification out;
  out.normalization = p.d;
  out.a = p.a;
  out.b = p.b;
  out.c = p.c;
  out.e = p.e;
  const ExactScalar one(1);
  if (p.a.is_zero() && p.b.is_zero()) {
    out.kase = ClassCase::DegPhi0;
    out.descriptor = FamilyDescriptor::H(-one, -p.c, ExactScalar{});
    out.map = {one, -p.e};
    return out;
  }
  if (p.a.is_zero()) {
    out.kase = ClassCase::DegPhi1;
    out.descriptor = FamilyDescriptor::H(p.b * p.b - one, p.b * p.e - p.c, p.b);
    out.map = {one, -p.e};
    return out;
  }
  out.kase = ClassCase::DegPhi2;
  const ExactScalar two(2);
  const ExactScalar four(4);
  out.D1 = (p.b + one) * (p.b + one) - four * p.a * (p.e + p.c);
  out.D2 = (p.b - one) * (p.b - one) - four * p.a * (p.c - p.e);
  out.r1r2 = p.b - two * p.a * p.e;
  out.r1sq_plus_r2sq = p.b * p.b + one - four * p.a * p.c;
  out.quartic = phi4_coefficients(pair);
  out.map = {one, -p.b / (two * p.a)};
  const ExactScalar two_a = two * p.a;
  const Roots r = roots_of(out.D1, out.D2);
  out.root_status = r.status;
  if (r.s1 && r.s2) {
    const ExactScalar r1 = (*r.s1 + *r.s2) / two;
    const ExactScalar r2 = (*r.s1 - *r.s2) / two;
    out.roots = {{r1, r2}};
    out.descriptor = FamilyDescriptor::Q(one / two_a, r1 / two_a, r2 / two_a);
  } else {
    out.descriptor = FamilyDescriptor::Q_symmetric(one / two_a, out.r1r2 / (two_a * two_a),
                                                   out.r1sq_plus_r2sq / (two_a * two_a));
  }
  return out;
}

std::array<ExactScalar, 4> quartic_roots(const PearsonPair& pair) {
  const Normalized p = normalize(pair);
  if (p.a.is_zero()) throw MathError("quartic roots need deg phi = 2");
  const ExactScalar one(1);
  const ExactScalar four(4);
  const ExactScalar D1 = (p.b + one) * (p.b + one) - four * p.a * (p.e + p.c);
  const ExactScalar D2 = (p.b - one) * (p.b - one) - four * p.a * (p.c - p.e);
  const Roots r = roots_of(D1, D2);
  if (!r.s1 || !r.s2) {
    throw MathError("sqrt(" + to_string(D1) + ") and sqrt(" + to_string(D2) + ") need two independent extensions");
  }
  const ExactScalar half = ExactScalar::rational(1, 2);
  const ExactScalar a1 = half + *r.s1 / four + *r.s2 / four;
  const ExactScalar a2 = half + *r.s1 / four - *r.s2 / four;
  return {a1, a2, one - a2, (one - a1) / p.a};
}

std::pair<ExactScalar, ExactScalar> case3_coefficients(const PearsonPair& pair, int n) {
  const Normalized p = normalize(pair);
  const ExactScalar& a = p.a;
  const ExactScalar N(n);
  const ExactScalar one(1);
  const ExactScalar two(2);
  // At n = 0 the factors (1 - 2a) in B_0 and (1 - a) in C_1 cancel.
  if (n == 0) {
    const ExactScalar C_den = one + a;
    if (C_den.is_zero()) throw DenominatorError("case-3 C denominator vanishes", n);
    return {-p.e, -Poly(phi4_coefficients(pair))(N) / C_den};
  }
  const ExactScalar B_den = (two * a * N - two * a + one) * (two * a * N + one);
  if (B_den.is_zero()) throw DenominatorError("case-3 B denominator vanishes", n);
  const ExactScalar B =
      -(two * a * p.b * N * N + two * (one - a) * p.b * N + (one - two * a) * p.e) / B_den;
  const std::vector<ExactScalar> q = phi4_coefficients(pair);
  const ExactScalar phi4 = Poly(q)(N);
  const ExactScalar s = two * a * N + one;
  const ExactScalar C_den = (two * a * N - a + one) * s * s * (two * a * N + a + one);
  if (C_den.is_zero()) throw DenominatorError("case-3 C denominator vanishes", n);
  const ExactScalar C = -(N + one) * (a * N - a + one) * phi4 / C_den;
  return {B, C};
}

}  // namespace bilattice
