#pragma once

#include <vector>

#include "bilattice/polynomial.hpp"
#include "bilattice/scalar.hpp"

namespace bilattice {

/// Coefficients of a monic three-term recurrence
///     P_{n+1} = (z - B_n) P_n - C_n P_{n-1},  P_0 = 1, P_{-1} = 0
/// for 0 <= n <= checked_to. C is 1-based: C()[n-1] holds C_n.
/// Norms h_n = m0 * C_1 * ... * C_n are derived, never stored independently.
class RecurrenceTable {
 public:
  /// The empty table (checked_to == -1).
  RecurrenceTable() = default;
  /// Requires |C| + 1 == |B|, every C_n != 0 and m0 != 0; throws
  /// RegularityError at the first vanishing C_n.
  RecurrenceTable(std::vector<ExactScalar> B, std::vector<ExactScalar> C, ExactScalar m0 = ExactScalar(1));

  int checked_to() const { return static_cast<int>(B_.size()) - 1; }
  const std::vector<ExactScalar>& B() const noexcept { return B_; }
  const std::vector<ExactScalar>& C() const noexcept { return C_; }
  const std::vector<ExactScalar>& h() const noexcept { return h_; }
  const ExactScalar& m0() const noexcept { return m0_; }

  /// 1-based accessor for C_n.
  const ExactScalar& C_at(int n) const;

  /// The first n+1 rows (B_0..B_n, C_1..C_n).
  RecurrenceTable truncated(int n) const;

  friend bool operator==(const RecurrenceTable& x, const RecurrenceTable& y) {
    return x.B_ == y.B_ && x.C_ == y.C_ && x.m0_ == y.m0_;
  }
  friend bool operator!=(const RecurrenceTable& x, const RecurrenceTable& y) { return !(x == y); }

 private:
  std::vector<ExactScalar> B_;
  std::vector<ExactScalar> C_;
  std::vector<ExactScalar> h_;
  ExactScalar m0_{1};
};

/// Monic P_0..P_N for N = table.checked_to().
std::vector<Poly> generate_ops(const RecurrenceTable& table);

}  // namespace bilattice
