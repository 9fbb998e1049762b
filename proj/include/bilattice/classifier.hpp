#pragma once

// Reduction of a Pearson pair to the H or Q family. After dividing phi and
// psi by d (so psi = z + e, phi = a z^2 + b z + c):
//   deg phi = 0:  H(-1, -c),         root 0,  shift mu = -e
//   deg phi = 1:  H(b^2 - 1, be - c), root b,  shift mu = -e
//   deg phi = 2:  Q(1/2a, r1/2a, r2/2a),       shift mu = -b/2a
// with D1 = (b+1)^2 - 4a(e+c), D2 = (b-1)^2 - 4a(c-e),
// r1 = (sqrt D1 + sqrt D2)/2, r2 = (sqrt D1 - sqrt D2)/2, so that
// r1 r2 = b - 2ae and r1^2 + r2^2 = b^2 + 1 - 4ac. Square roots take the
// principal branch of sqrt_exact; the family does not depend on the branch up
// to the symmetries of Q.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilattice/families.hpp"
#include "bilattice/pearson.hpp"

namespace bilattice {

enum class ClassCase { DegPhi0, DegPhi1, DegPhi2 };
std::string to_string(ClassCase c);

/// How the square roots of D1 and D2 were represented.
enum class RootStatus { NotNeeded, Exact, OneExtension, NeedsTwoExtensions };
std::string to_string(RootStatus s);

struct Classification {
  ClassCase kase = ClassCase::DegPhi0;
  /// The d divided out of phi and psi.
  ExactScalar normalization;
  /// Normalized coefficients a, b, c, e.
  ExactScalar a, b, c, e;
  FamilyDescriptor descriptor;
  AffineMap map;
  RootStatus root_status = RootStatus::NotNeeded;
  /// DegPhi2 only.
  ExactScalar D1, D2;
  std::optional<std::pair<ExactScalar, ExactScalar>> roots;
  ExactScalar r1r2, r1sq_plus_r2sq;
  /// Ascending coefficients of phi_4(n) (DegPhi2 only).
  std::vector<ExactScalar> quartic;
};

/// Throws MathError when deg psi != 1.
Classification classify(const PearsonPair& pair);

/// phi_4(n) = 4a^3 n^4 + 8a^2 n^3 + a(5 + 4ac - b^2) n^2 + (1 - b^2 + 4ac) n
///            + c - be + ae^2, ascending, for the normalized pair.
std::vector<ExactScalar> phi4_coefficients(const PearsonPair& pair);

/// (alpha1..alpha4) with phi_4(n) = 4(an+alpha1)(an+alpha2)(an+alpha3)(n+alpha4).
/// Requires deg phi = 2; throws MathError when the roots need two extensions.
std::array<ExactScalar, 4> quartic_roots(const PearsonPair& pair);

/// Case-3 closed forms (B_n, C_{n+1}) for the normalized pair:
///   B_n = -(2ab n^2 + 2(1-a) b n + (1-2a) e)/((2an - 2a + 1)(2an + 1))
///   C_{n+1} = -(n+1)(an - a + 1) phi_4(n)/((2an - a + 1)(2an + 1)^2 (2an + a + 1))
std::pair<ExactScalar, ExactScalar> case3_coefficients(const PearsonPair& pair, int n);

}  // namespace bilattice
