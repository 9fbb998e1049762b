#include "bilattice/pearson.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

PearsonPair::PearsonPair(Poly phi, Poly psi, Lattice lattice)
    : phi_(std::move(phi)), psi_(std::move(psi)), lattice_(std::move(lattice)) {
  if (!lattice_) throw ContextMismatch("Pearson pair without a lattice");
  if (phi_.degree() > 2) throw MathError("phi must have degree at most 2");
  if (psi_.degree() > 1) throw MathError("psi must have degree at most 1");
  if (phi_.is_zero() && psi_.is_zero()) throw MathError("phi and psi are both zero");
}

}  // namespace bilattice
