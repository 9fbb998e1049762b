#include "bilattice/classical.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

AdmissibilityVerdict admissible(const PearsonPair& pair, int N) {
  AdmissibilityVerdict v;
  for (int n = 0; n <= N; ++n) {
    if (pair.d_n(n).is_zero()) {
      v.ok = false;
      v.failing_index = n;
      return v;
    }
    v.checked_to = n;
  }
  return v;
}

std::string RegularityVerdict::describe() const {
  if (ok) return "regular for n <= " + std::to_string(checked_to);
  const std::string at = " fails at n=" + std::to_string(failing_n.value_or(-1));
  if (condition == RegularityCondition::Admissibility) {
    return "condition 1" + at + " (d_" + std::to_string(d_index.value_or(-1)) + " = 0)";
  }
  return "condition 2" + at;
}

ExactScalar regularity_value(const PearsonPair& pair, int n) {
  const ExactScalar d2n = pair.d_n(2L * n);
  if (d2n.is_zero()) throw AdmissibilityError("d_n = a n + d vanishes", 2L * n);
  return pair.phi()(-pair.e_n(n) / d2n) + ExactScalar(n) * pair.d_n(n);
}

RegularityVerdict regular(const PearsonPair& pair, int N) {
  RegularityVerdict v;
  int next_d = 0;
  for (int n = 0; n <= N; ++n) {
    for (; next_d <= 2 * n + 1; ++next_d) {
      if (pair.d_n(next_d).is_zero()) {
        v.ok = false;
        v.failing_n = n;
        v.condition = RegularityCondition::Admissibility;
        v.d_index = next_d;
        return v;
      }
    }
    if (regularity_value(pair, n).is_zero()) {
      v.ok = false;
      v.failing_n = n;
      v.condition = RegularityCondition::Nondegeneracy;
      return v;
    }
    v.checked_to = n;
  }
  return v;
}

namespace {

void require_regular(const PearsonPair& pair, int N) {
  const RegularityVerdict v = regular(pair, N);
  if (v.ok) return;
  if (v.condition == RegularityCondition::Admissibility) {
    throw AdmissibilityError("d_n = a n + d vanishes", *v.d_index);
  }
  throw RegularityError("phi(-e_n/d_2n) + n d_n vanishes", *v.failing_n);
}

ExactScalar closed_B(const PearsonPair& pair, int n) {
  ExactScalar B = -ExactScalar(n + 1) * pair.e_n(n) / pair.d_n(2L * n);
  if (n > 0) B += ExactScalar(n) * pair.e_n(n - 1) / pair.d_n(2L * n - 2);
  return B;
}

/// C_{n+1}.
ExactScalar closed_C(const PearsonPair& pair, int n) {
  ExactScalar ratio(1);
  if (n > 0) ratio = pair.d_n(n - 1) / pair.d_n(2L * n - 1);
  return -ExactScalar(n + 1) * ratio / pair.d_n(2L * n + 1) * regularity_value(pair, n);
}

}  // namespace

RecurrenceTable recurrence_coeffs(const PearsonPair& pair, int N, const ExactScalar& m0) {
  if (N < 0) return {};
  require_regular(pair, N - 1);
  if (pair.d_n(2L * N).is_zero()) throw AdmissibilityError("d_n = a n + d vanishes", 2L * N);
  std::vector<ExactScalar> B;
  std::vector<ExactScalar> C;
  for (int n = 0; n <= N; ++n) {
    B.push_back(closed_B(pair, n));
    if (n < N) C.push_back(closed_C(pair, n));
  }
  return {std::move(B), std::move(C), m0};
}

IteratedPair iterated_pair(const PearsonPair& pair, int k) {
  if (k < 0) throw MathError("iteration index must be nonnegative");
  const Lattice& lat = pair.lattice();
  const ExactScalar K(k);
  SigmaPoly w = SigmaPoly::z(lat);
  if (k % 2 != 0) w -= SigmaPoly::constant(lat, SigmaScalar::sigma() * SigmaScalar(ExactScalar(2) * pair.gamma()));
  const SigmaPoly one = SigmaPoly::constant(lat, SigmaScalar(1));
  const ExactScalar lead = ExactScalar(2) * pair.a() * K + pair.d();
  SigmaPoly psi = SigmaScalar(lead) * w + SigmaScalar(pair.b() * K + pair.e()) * one;
  SigmaPoly phi = SigmaScalar(pair.a()) * (w * w) + SigmaScalar(pair.b()) * w +
                  SigmaScalar(pair.c() + K * (pair.a() * K + pair.d())) * one;
  return {k, std::move(phi), std::move(psi)};
}

IteratedPair iterated_pair_recursive(const PearsonPair& pair, int k) {
  if (k < 0) throw MathError("iteration index must be nonnegative");
  SigmaPoly phi = pair.phi_sigma();
  SigmaPoly psi = pair.psi_sigma();
  for (int j = 0; j < k; ++j) {
    SigmaPoly next_phi = apply_S(phi) + apply_D(psi);
    SigmaPoly next_psi = apply_D(phi) + apply_S(psi);
    phi = std::move(next_phi);
    psi = std::move(next_psi);
  }
  return {k, std::move(phi), std::move(psi)};
}

namespace {

MomentFunctional derived_step(const MomentFunctional& u, const PearsonPair& pair, int j) {
  const IteratedPair it = iterated_pair(pair, j);
  return dual_D(left_mul(it.psi, u)) - dual_S(left_mul(it.phi, u));
}

}  // namespace

MomentFunctional derived_functional(const MomentFunctional& u, const PearsonPair& pair, int k) {
  if (k < 0) throw MathError("iteration index must be nonnegative");
  MomentFunctional v = u;
  for (int j = 0; j < k; ++j) v = derived_step(v, pair, j);
  return v;
}

DerivativeOps derivative_ops(const RecurrenceTable& table, const Lattice& lattice, int k, int N) {
  if (k < 0 || N < 0) throw MathError("indices must be nonnegative");
  if (table.checked_to() < N + k) throw TruncationError("table too short for derivative polynomials", N + k);
  const std::vector<Poly> P = generate_ops(table);
  DerivativeOps out;
  for (int n = 0; n <= N; ++n) {
    SigmaPoly f = apply_D_power(SigmaPoly(lattice, P[static_cast<std::size_t>(n + k)]), static_cast<unsigned>(k));
    Rational scale(1);
    for (int j = 1; j <= k; ++j) scale /= n + j;
    f *= SigmaScalar(ExactScalar(scale));
    if (!f.is_sigma_free()) out.sigma_free = false;
    out.polys.push_back(std::move(f));
  }
  return out;
}

RodriguesData rodrigues(const PearsonPair& pair, int N) {
  require_regular(pair, N);
  RodriguesData r;
  auto d = [&](long n) { return pair.d_n(n); };
  for (int n = 0; n <= N; ++n) {
    if (n == 0) {
      r.a.push_back(-pair.d());
      r.s.push_back(pair.e());
    } else {
      const ExactScalar an = -d(2L * n) * d(2L * n - 1) / d(n - 1);
      r.s.push_back(an * closed_B(pair, n));
      // Unreduced form, evaluated in the sigma-ring.
      const SigmaPoly phi_prev = iterated_pair(pair, n - 1).phi;
      const ExactScalar shift = n % 2 == 0 ? ExactScalar(2) * pair.gamma() : ExactScalar{};
      const SigmaScalar at(-pair.e_n(n - 1) / d(2L * n - 2), shift);
      const SigmaScalar tn = SigmaScalar(an * ExactScalar(n) * d(2L * n - 2) / d(2L * n - 1)) * phi_prev(at);
      if (!tn.is_sigma_free()) throw SigmaResidueError("t_n carries a sigma part", n);
      r.t.push_back(tn.plain());
      r.a.push_back(an);
    }
    ExactScalar kn = n % 2 == 0 ? ExactScalar(1) : ExactScalar(-1);
    for (int j = 1; j <= n; ++j) kn /= d(n + j - 2L);
    r.k.push_back(kn);
  }
  r.R.push_back(Poly::constant(ExactScalar(1)));
  for (int n = 0; n < N; ++n) {
    Poly next = Poly({-r.s[n], r.a[n]}) * r.R[n];
    if (n > 0) next -= r.t[n - 1] * r.R[n - 1];
    r.R.push_back(std::move(next));
  }
  return r;
}

RodriguesCheck rodrigues_check(const PearsonPair& pair, int N, int M) {
  RodriguesCheck out;
  const RodriguesData rd = rodrigues(pair, N);
  const std::vector<Poly> P = generate_ops(recurrence_coeffs(pair, N));
  for (int n = 0; n <= N; ++n) {
    if (!(rd.k[n] * rd.R[n] == P[n])) out.failures.push_back("P_n != k_n R_n at n=" + std::to_string(n));
  }
  const Lattice& lat = pair.lattice();
  const MomentFunctional u = solve_pearson_moments(pair, SigmaScalar(1), 2 * N + M);
  MomentFunctional uk = u;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) uk = derived_step(uk, pair, n - 1);
    const MomentFunctional lhs = left_mul(SigmaPoly(lat, P[n]), u);
    const MomentFunctional rhs = dual_D_power(uk, static_cast<unsigned>(n));
    for (int m = 0; m <= M; ++m) {
      const SigmaPoly zm = SigmaPoly::monomial(lat, static_cast<unsigned>(m));
      const SigmaScalar diff = ::bilattice::pair(lhs, zm) - SigmaScalar(rd.k[n]) * ::bilattice::pair(rhs, zm);
      if (!diff.is_zero()) {
        out.failures.push_back("Rodrigues identity fails at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      }
    }
  }
  out.ok = out.failures.empty();
  out.checked_n = N;
  out.checked_m = M;
  return out;
}

}  // namespace bilattice
