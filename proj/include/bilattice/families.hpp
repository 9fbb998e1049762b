#pragma once

// Named orthogonal families, affine maps of recurrence tables, and exact
// checks of the identities linking the classical lattice families to the
// H and Q families of the bi-lattice.
//
//   H(a, b):     B_n = -2n r,  C_{n+1} = (an + b)(n + 1),  r = sqrt(a + 1)
//   Q(a, b, c):  B_n = (a-1) bc / ((n+a)(n+a-1)),
//                C_{n+1} = -(n+1)(n+2a-1) / ((2n+2a-1)(2n+2a+1))
//                          * ((n+a)^2 - b^2)((n+a)^2 - c^2) / (n+a)^2
//
// Q depends on (b, c) only through p = bc and q = b^2 + c^2, so a Q
// descriptor may carry either {a, b, c} or {a, bc, b2_plus_c2}. Removable
// singularities are evaluated as limits: B_0 = bc/a, the factor
// (n+2a-1)/(2n+2a-1) is 1 at n = 0, and B_n = 0 and
// C_{n+1} = -(n+1)(n+2a-1)((n+a)^2 - q)/((2n+2a-1)(2n+2a+1)) when p = 0.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilattice/pearson.hpp"
#include "bilattice/recurrence.hpp"

namespace bilattice {

enum class FamilyKind { H, Q, Meixner, Charlier, Krawtchouk, Hahn, ParaKrawtchouk };

std::string to_string(FamilyKind kind);
/// Accepts the to_string names case-insensitively, plus "para-krawtchouk".
FamilyKind parse_family_kind(const std::string& name);

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::H;
  /// H: a, b. Q: a, b, c or a, bc, b2_plus_c2. Meixner: beta, c.
  /// Charlier: a. Krawtchouk: p, N. Hahn: alpha, beta, N.
  /// ParaKrawtchouk: mu, N.
  std::map<std::string, ExactScalar> params;
  /// H only: the branch of sqrt(a + 1) to use.
  std::optional<ExactScalar> root;

  const ExactScalar& param(const std::string& name) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }

  static FamilyDescriptor H(ExactScalar a, ExactScalar b, std::optional<ExactScalar> root = std::nullopt);
  static FamilyDescriptor Q(ExactScalar a, ExactScalar b, ExactScalar c);
  static FamilyDescriptor Q_symmetric(ExactScalar a, ExactScalar bc, ExactScalar b2_plus_c2);
  static FamilyDescriptor meixner(ExactScalar beta, ExactScalar c);
  static FamilyDescriptor charlier(ExactScalar a);
  static FamilyDescriptor krawtchouk(ExactScalar p, long N);
  static FamilyDescriptor hahn(ExactScalar alpha, ExactScalar beta, long N);
  static FamilyDescriptor para_krawtchouk(ExactScalar mu, long N);
};

/// The explicit root, or the principal sqrt(a + 1) when it is a Gaussian
/// rational; throws MathError otherwise.
ExactScalar h_root(const FamilyDescriptor& desc);

/// (bc, b^2 + c^2) of a Q descriptor.
std::pair<ExactScalar, ExactScalar> q_invariants(const FamilyDescriptor& desc);

/// N for Krawtchouk, Hahn and para-Krawtchouk (C_{N+1} = 0), none otherwise.
std::optional<int> finite_cutoff(const FamilyDescriptor& desc);

/// (B_n, C_{n+1}); throws DenominatorError(n) on a vanishing denominator.
std::pair<ExactScalar, ExactScalar> family_coefficients(const FamilyDescriptor& desc, int n);

/// Rows 0..min(N, cutoff). Throws DenominatorError or RegularityError (C_n = 0
/// inside the range) with the index.
RecurrenceTable family_recurrence(const FamilyDescriptor& desc, int N);

/// Largest n <= horizon for which family_recurrence(desc, n) succeeds; -1 if none.
int max_valid_index(const FamilyDescriptor& desc, int horizon);

/// P_n(z) = lambda^n Q_n((z - mu)/lambda); B' = lambda B + mu, C' = lambda^2 C.
struct AffineMap {
  ExactScalar lambda{1};
  ExactScalar mu{};

  AffineMap inverse() const;
  static AffineMap identity() { return {}; }
};

RecurrenceTable affine_transform(const RecurrenceTable& table, const AffineMap& map);

struct SignReport {
  ExactScalar root;
  std::vector<int> failures;
  bool selected = false;
};

struct IdentityReport {
  std::string identity;
  std::map<std::string, ExactScalar> params;
  int checked_to = -1;
  /// n at which B_n or C_n disagree, for the selected root sign.
  std::vector<int> failures;
  /// Meixner, Krawtchouk and Charlier: one entry per sign of sqrt(a_H + 1).
  std::vector<SignReport> signs;
  FamilyDescriptor source;
  FamilyDescriptor target;
  AffineMap map;

  bool passed() const { return failures.empty(); }
};

/// Canonical identity names.
const std::vector<std::string>& identity_names();
/// Accepts the canonical names and the bare family names ("meixner", ...).
std::string canonical_identity(const std::string& name);

/// Checks the named identity at recurrence level for n <= N (clamped to the
/// family's cutoff). Throws DenominatorError when a parameter makes a
/// formula singular.
IdentityReport verify_identity(const std::string& name, const std::map<std::string, ExactScalar>& params, int N);

/// The Q formulas above evaluated literally, with only the n = 0 simplifications.
std::pair<ExactScalar, ExactScalar> q_coefficients_literal(const ExactScalar& a, const ExactScalar& b,
                                                           const ExactScalar& c, int n);

struct SymmetryReport {
  bool identical = true;
  int checked_to = -1;
  /// Tables for (a,b,c), (a,c,b), (a,-c,-b).
  std::vector<RecurrenceTable> tables;
};

SymmetryReport q_symmetry_check(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c, int N);

/// A Pearson pair whose closed-form table is the H or Q table shifted by mu:
///   H: (r z - b, z),   Q: (z^2 + a^2 - b^2 - c^2, 2a z - 2bc),
/// each composed with z -> z - mu. Throws MathError for other kinds.
PearsonPair pearson_pair_for(const FamilyDescriptor& desc, const Lattice& lattice,
                             const ExactScalar& mu = ExactScalar{});

}  // namespace bilattice
