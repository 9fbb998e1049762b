#pragma once

// A Pearson pair (phi, psi) on a bi-lattice: the data of D_s(phi u) = S_s(psi u)
// with phi = a z^2 + b z + c and psi = d z + e.

#include "bilattice/polynomial.hpp"
#include "bilattice/sigma_ring.hpp"

namespace bilattice {

class PearsonPair {
 public:
  /// Throws MathError unless deg phi <= 2, deg psi <= 1 and (phi, psi) != (0, 0).
  PearsonPair(Poly phi, Poly psi, Lattice lattice);

  const Poly& phi() const noexcept { return phi_; }
  const Poly& psi() const noexcept { return psi_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  const ExactScalar& gamma() const { return lattice_->gamma(); }

  ExactScalar a() const { return phi_.coeff(2); }
  ExactScalar b() const { return phi_.coeff(1); }
  ExactScalar c() const { return phi_.coeff(0); }
  ExactScalar d() const { return psi_.coeff(1); }
  ExactScalar e() const { return psi_.coeff(0); }

  /// d_n = a n + d. The linear coefficient b of phi is phi'(0), so
  /// e_n = b n + e is the same quantity as phi'(0) n + psi(0).
  ExactScalar d_n(long n) const { return a() * ExactScalar(n) + d(); }
  ExactScalar e_n(long n) const { return b() * ExactScalar(n) + e(); }

  SigmaPoly phi_sigma() const { return SigmaPoly(lattice_, phi_); }
  SigmaPoly psi_sigma() const { return SigmaPoly(lattice_, psi_); }

  /// The same pair on another lattice.
  PearsonPair with_lattice(Lattice lattice) const { return {phi_, psi_, std::move(lattice)}; }

 private:
  Poly phi_;
  Poly psi_;
  Lattice lattice_;
};

}  // namespace bilattice
