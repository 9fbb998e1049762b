#pragma once

// Regularity, closed-form recurrence coefficients, iterated pairs, derived
// functionals and Rodrigues data for a Pearson pair.
//
// With d_n = a n + d and e_n = b n + e:
//   regular      d_n != 0 and phi(-e_n/d_{2n}) + n d_n != 0 for every n
//   B_n          n e_{n-1}/d_{2n-2} - (n+1) e_n/d_{2n}
//   C_{n+1}      -(n+1) d_{n-1}/(d_{2n-1} d_{2n+1}) (phi(-e_n/d_{2n}) + n d_n)
//   k_n          (-1)^n prod_{j=1..n} 1/d_{n+j-2}
// The factor d_{n-1}/d_{2n-1} is read as 1 at n = 0.

#include <optional>
#include <string>
#include <vector>

#include "bilattice/functional.hpp"
#include "bilattice/pearson.hpp"
#include "bilattice/recurrence.hpp"

namespace bilattice {

struct AdmissibilityVerdict {
  bool ok = true;
  int checked_to = -1;
  std::optional<int> failing_index;
};

/// d_n != 0 for 0 <= n <= N.
AdmissibilityVerdict admissible(const PearsonPair& pair, int N);

enum class RegularityCondition { None, Admissibility, Nondegeneracy };

struct RegularityVerdict {
  bool ok = true;
  int checked_to = -1;
  /// First n at which the check failed.
  std::optional<int> failing_n;
  RegularityCondition condition = RegularityCondition::None;
  /// For admissibility failures, the j with d_j = 0.
  std::optional<int> d_index;
  std::string describe() const;
};

/// phi(-e_n/d_{2n}) + n d_n; requires d_{2n} != 0.
ExactScalar regularity_value(const PearsonPair& pair, int n);

/// Scans n = 0..N. At each n it first requires d_j != 0 for every
/// j <= 2n+1 (all denominators used by rows up to n+1), then
/// phi(-e_n/d_{2n}) + n d_n != 0. A pass certifies C_1..C_{N+1} != 0.
RegularityVerdict regular(const PearsonPair& pair, int N);

/// B_0..B_N and C_1..C_N. Requires regular(pair, N-1) and d_{2N} != 0,
/// which is exactly what these rows use; throws AdmissibilityError (index j
/// of the vanishing d_j) or RegularityError (the n with C_{n+1} = 0).
RecurrenceTable recurrence_coeffs(const PearsonPair& pair, int N, const ExactScalar& m0 = ExactScalar(1));

/// (phi^[k], psi^[k]).
struct IteratedPair {
  int k = 0;
  SigmaPoly phi;
  SigmaPoly psi;
};

/// Closed form: with w = z - sigma gamma (1 - (-1)^k),
///   psi^[k] = (2ak + d) w + bk + e,  phi^[k] = a w^2 + b w + c + k(ak + d).
IteratedPair iterated_pair(const PearsonPair& pair, int k);
/// phi^[k+1] = S phi^[k] + D psi^[k], psi^[k+1] = D phi^[k] + S psi^[k].
IteratedPair iterated_pair_recursive(const PearsonPair& pair, int k);

/// u^[k], with u^[j+1] = D(psi^[j] u^[j]) - S(phi^[j] u^[j]). Each step
/// costs up to two orders of truncation.
MomentFunctional derived_functional(const MomentFunctional& u, const PearsonPair& pair, int k);

/// P_n^[k] = n!/(n+k)! D^k P_{n+k} for n = 0..N, from a table reaching N+k.
/// D^k introduces sigma-parts when gamma != 0; they are kept and flagged.
struct DerivativeOps {
  std::vector<SigmaPoly> polys;
  bool sigma_free = true;
};
DerivativeOps derivative_ops(const RecurrenceTable& table, const Lattice& lattice, int k, int N);

/// a_n, s_n for n = 0..N; t_n for n = 1..N stored as t[n-1]; R_0..R_N;
/// k_0..k_N.
struct RodriguesData {
  std::vector<ExactScalar> a;
  std::vector<ExactScalar> s;
  std::vector<ExactScalar> t;
  std::vector<Poly> R;
  std::vector<ExactScalar> k;
};

/// Requires regular(pair, N). t_n is evaluated in the sigma-ring from the
/// unreduced definition and must come out sigma-free (SigmaResidueError).
RodriguesData rodrigues(const PearsonPair& pair, int N);

struct RodriguesCheck {
  bool ok = true;
  int checked_n = -1;
  int checked_m = -1;
  std::vector<std::string> failures;
};

/// Verifies P_n = k_n R_n for n <= N and <P_n u - k_n D^n u^[n], z^m> = 0
/// for n <= N, m <= M, with u the normalized Pearson functional.
RodriguesCheck rodrigues_check(const PearsonPair& pair, int N, int M);

}  // namespace bilattice
