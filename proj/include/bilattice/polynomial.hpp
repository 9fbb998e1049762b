#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bilattice/scalar.hpp"

namespace bilattice {

/// Dense univariate polynomial in z with ExactScalar coefficients, stored in
/// ascending order. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<ExactScalar> coeffs);
  Poly(std::initializer_list<ExactScalar> coeffs);

  static Poly constant(const ExactScalar& c);
  static Poly monomial(unsigned degree, const ExactScalar& c = ExactScalar(1));
  static Poly z() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^k; zero beyond the degree.
  ExactScalar coeff(std::size_t k) const;
  ExactScalar leading() const;
  const std::vector<ExactScalar>& coeffs() const noexcept { return coeffs_; }

  ExactScalar operator()(const ExactScalar& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ExactScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const ExactScalar& c) { return a *= c; }
  friend Poly operator*(const ExactScalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// p(z + shift)
  Poly translate(const ExactScalar& shift) const;
  /// p(scale * z + shift)
  Poly compose_affine(const ExactScalar& scale, const ExactScalar& shift) const;

 private:
  void normalize();
  std::vector<ExactScalar> coeffs_;
};

/// "c0 + c1*z + c2*z^2"; non-real or surd coefficients are parenthesized.
std::string to_string(const Poly& p, char var = 'z');

}  // namespace bilattice
