#pragma once

// Linear functionals on the sigma-ring, represented by two finite tables
//     moments[k] = <u, z^k>,   twisted[k] = <u, sigma z^k>,   0 <= k <= order
// so that <u, p + sigma q> = sum p_k moments[k] + sum q_k twisted[k].
//
// A functional given by moments alone is sigma-linear: twisted = sigma * moments.
// The dual operators are exact transposes on the whole ring,
//     <D u, f> = -<u, D f>,   <S u, f> = <u, S f>,   <g u, f> = <u, g f>,
// and do not preserve sigma-linearity (D(sigma q) = -sigma D q), which is why
// the second table exists.

#include <vector>

#include "bilattice/pearson.hpp"
#include "bilattice/recurrence.hpp"
#include "bilattice/sigma_ring.hpp"

namespace bilattice {

class MomentFunctional {
 public:
  /// Sigma-linear functional: twisted[k] = parity * sigma * moments[k], parity = +1 or -1.
  MomentFunctional(Lattice lattice, std::vector<SigmaScalar> moments, int parity = 1);
  MomentFunctional(Lattice lattice, std::vector<SigmaScalar> moments, std::vector<SigmaScalar> twisted);

  const Lattice& lattice() const noexcept { return lattice_; }
  /// Highest k with a known moment; -1 for the empty functional.
  int order() const { return static_cast<int>(moments_.size()) - 1; }
  const std::vector<SigmaScalar>& moments() const noexcept { return moments_; }
  const std::vector<SigmaScalar>& twisted() const noexcept { return twisted_; }

  /// <u, z^k>; throws TruncationError beyond order().
  const SigmaScalar& moment(int k) const;
  const SigmaScalar& twisted_moment(int k) const;

  /// Every <u, z^k> is sigma-free.
  bool moments_sigma_free() const;
  /// twisted == parity * sigma * moments.
  bool is_sigma_linear(int parity = 1) const;

  MomentFunctional truncated(int order) const;

  /// Sums truncate to the smaller order; lattices must agree.
  MomentFunctional& operator+=(const MomentFunctional& o);
  MomentFunctional& operator-=(const MomentFunctional& o);
  MomentFunctional& operator*=(const SigmaScalar& c);
  friend MomentFunctional operator+(MomentFunctional x, const MomentFunctional& y) { return x += y; }
  friend MomentFunctional operator-(MomentFunctional x, const MomentFunctional& y) { return x -= y; }
  friend MomentFunctional operator*(const SigmaScalar& c, MomentFunctional x) { return x *= c; }

 private:
  Lattice lattice_;
  std::vector<SigmaScalar> moments_;
  std::vector<SigmaScalar> twisted_;
};

/// <u, f>; throws TruncationError when deg f > u.order().
SigmaScalar pair(const MomentFunctional& u, const SigmaPoly& f);

/// Same order as u.
MomentFunctional dual_D(const MomentFunctional& u);
MomentFunctional dual_S(const MomentFunctional& u);
MomentFunctional dual_D_power(MomentFunctional u, unsigned n);
/// Order u.order() - deg f; throws TruncationError if that is negative.
MomentFunctional left_mul(const SigmaPoly& f, const MomentFunctional& u);

/// Moments m_0..m_N of the sigma-linear solution of D(phi u) = S(psi u) with
/// m_0 given. Each m_n is fixed by <u, phi D z^{n-1} + psi S z^{n-1}> = 0,
/// whose z^n coefficient is d_{n-1}. Throws AdmissibilityError(n-1) when it
/// vanishes.
MomentFunctional solve_pearson_moments(const PearsonPair& pair, const SigmaScalar& m0, int N);

/// Same solver for sigma-dependent phi, psi (iterated pairs). `parity`
/// selects the sigma-linear class of the solution (+1 or -1).
MomentFunctional solve_twisted_pearson(const SigmaPoly& phi, const SigmaPoly& psi, const SigmaScalar& m0, int N,
                                       int parity = 1);

/// Hankel determinant oracle. With m_k the (sigma-free) moments,
///     Delta_n  = det(m_{i+j})_{0<=i,j<=n},              Delta_{-1} = 1
///     Delta'_n = Delta_n with its last column replaced by (m_{i+n+1})_i,
///                                                        Delta'_{-1} = 0
///     B_n = Delta'_n / Delta_n - Delta'_{n-1} / Delta_{n-1}
///     C_n = Delta_n Delta_{n-2} / Delta_{n-1}^2
/// regular_up_to is the largest n <= N with Delta_0..Delta_n all nonzero
/// (-1 if Delta_0 = 0); `table` holds rows 0..regular_up_to.
struct HankelReport {
  std::vector<ExactScalar> delta;
  std::vector<ExactScalar> delta_shifted;
  int regular_up_to = -1;
  RecurrenceTable table;
};

/// Requires u.order() >= 2N + 1 and sigma-free moments (SigmaResidueError).
HankelReport hankel_oracle(const MomentFunctional& u, int N);

/// det of a square matrix by Gaussian elimination over the field.
ExactScalar determinant(std::vector<std::vector<ExactScalar>> rows);

}  // namespace bilattice
