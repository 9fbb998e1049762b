#pragma once

// The twisted ring { p(z) + sigma q(z) : sigma^2 = 1 } on the bi-lattice
// x(s) = s + gamma (1 + (-1)^s), with z = x(s) and sigma = (-1)^s.
//
// The variable s is never materialized. A unit step s -> s +/- 1 acts on the
// ring as the homomorphism
//     z     -> z +/- 1 - 2 gamma sigma
//     sigma -> -sigma
// and the difference/average operators are
//     D f = (f(s+1) - f(s-1)) / 2,    S f = (f(s+1) + f(s-1)) / 2.

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>

#include "bilattice/polynomial.hpp"
#include "bilattice/scalar.hpp"

namespace bilattice {

class LatticeContext {
 public:
  explicit LatticeContext(ExactScalar gamma) : gamma_(std::move(gamma)) {}
  const ExactScalar& gamma() const noexcept { return gamma_; }

 private:
  ExactScalar gamma_;
};

using Lattice = std::shared_ptr<const LatticeContext>;

Lattice make_lattice(const ExactScalar& gamma);
/// Same pointer, or equal gamma.
bool same_lattice(const Lattice& a, const Lattice& b);

/// plain + sigma * sigma_part, with sigma^2 = 1.
class SigmaScalar {
 public:
  SigmaScalar() = default;
  SigmaScalar(ExactScalar plain) : plain_(std::move(plain)) {}  // NOLINT(google-explicit-constructor)
  SigmaScalar(long v) : plain_(v) {}  // NOLINT(google-explicit-constructor)
  SigmaScalar(ExactScalar plain, ExactScalar sigma) : plain_(std::move(plain)), sigma_(std::move(sigma)) {}

  static SigmaScalar sigma() { return {ExactScalar{}, ExactScalar(1)}; }

  const ExactScalar& plain() const noexcept { return plain_; }
  const ExactScalar& sigma_part() const noexcept { return sigma_; }
  bool is_sigma_free() const { return sigma_.is_zero(); }
  bool is_zero() const { return plain_.is_zero() && sigma_.is_zero(); }

  /// Value after a unit lattice step (sigma -> -sigma).
  SigmaScalar flipped() const { return {plain_, -sigma_}; }

  SigmaScalar& operator+=(const SigmaScalar& o);
  SigmaScalar& operator-=(const SigmaScalar& o);
  SigmaScalar& operator*=(const SigmaScalar& o);
  /// Division by a sigma-free scalar, or by any unit a + sigma b with
  /// a^2 != b^2. Throws DivisionByZero for zero divisors.
  SigmaScalar& operator/=(const SigmaScalar& o);
  friend SigmaScalar operator+(SigmaScalar a, const SigmaScalar& b) { return a += b; }
  friend SigmaScalar operator-(SigmaScalar a, const SigmaScalar& b) { return a -= b; }
  friend SigmaScalar operator*(SigmaScalar a, const SigmaScalar& b) { return a *= b; }
  friend SigmaScalar operator/(SigmaScalar a, const SigmaScalar& b) { return a /= b; }
  SigmaScalar operator-() const { return {-plain_, -sigma_}; }

  friend bool operator==(const SigmaScalar& a, const SigmaScalar& b) {
    return a.plain_ == b.plain_ && a.sigma_ == b.sigma_;
  }

 private:
  ExactScalar plain_;
  ExactScalar sigma_;
};

/// "p" or "p+s*(q)".
std::string to_string(const SigmaScalar& x);

class SigmaPoly {
 public:
  explicit SigmaPoly(Lattice lattice, Poly even = {}, Poly odd = {});

  static SigmaPoly constant(Lattice lattice, const SigmaScalar& c);
  static SigmaPoly z(Lattice lattice);
  static SigmaPoly monomial(Lattice lattice, unsigned k);
  static SigmaPoly sigma(Lattice lattice);

  const Lattice& lattice() const noexcept { return lattice_; }
  const ExactScalar& gamma() const { return lattice_->gamma(); }
  const Poly& even_part() const noexcept { return even_; }
  const Poly& odd_part() const noexcept { return odd_; }

  /// Max degree of the two parts; -1 for the zero polynomial.
  int degree() const { return std::max(even_.degree(), odd_.degree()); }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_sigma_free() const { return odd_.is_zero(); }
  SigmaScalar coeff(std::size_t k) const { return {even_.coeff(k), odd_.coeff(k)}; }

  SigmaScalar operator()(const SigmaScalar& at) const;

  SigmaPoly& operator+=(const SigmaPoly& o);
  SigmaPoly& operator-=(const SigmaPoly& o);
  SigmaPoly& operator*=(const SigmaScalar& c);
  friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
  friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
  friend SigmaPoly operator*(SigmaPoly a, const SigmaScalar& c) { return a *= c; }
  friend SigmaPoly operator*(const SigmaScalar& c, SigmaPoly a) { return a *= c; }
  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
  SigmaPoly operator-() const;

  /// Equal parts; throws ContextMismatch for different lattices.
  friend bool operator==(const SigmaPoly& a, const SigmaPoly& b);

 private:
  void check_same(const SigmaPoly& o) const;

  Lattice lattice_;
  Poly even_;
  Poly odd_;
};

/// The lattice step s -> s + direction (direction = +1 or -1).
SigmaPoly lattice_shift(const SigmaPoly& f, int direction);

SigmaPoly apply_D(const SigmaPoly& f);
SigmaPoly apply_S(const SigmaPoly& f);
SigmaPoly apply_D_power(SigmaPoly f, unsigned n);

/// T_{n,k} f of the Leibniz formula; zero when k < 0 or k > n.
SigmaPoly leibniz_T(int n, int k, const SigmaPoly& f);

/// "c0 + c1*z + ... + s*(d0 + d1*z + ...)".
std::string to_string(const SigmaPoly& f);

/// Parses any polynomial expression in z and s (the symbol for sigma):
/// integers, i, z, s, + - * / (by constants), ^ (nonnegative integer
/// powers), parentheses and sqrt(constant). Juxtaposed factors such as
/// "2z" or "1/2i" multiply left to right.
SigmaPoly parse_sigma_poly(std::string_view text, Lattice lattice);

}  // namespace bilattice
