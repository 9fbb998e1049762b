#pragma once

// Exact complex-rational arithmetic, optionally extended by one square root.
//
// ExactScalar represents (re + i im) + (surd_re + i surd_im) * sqrt(D) where
// D is a Gaussian rational that is not a perfect square. D lives in a shared,
// immutable QuadraticExtension; a scalar without an extension is a plain
// Gaussian rational.

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace bilattice {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text, e.g. "3/4-2/5i", "i", "-1/2i", "0".
std::string to_string(const GaussianRational& g);

/// Square root inside the Gaussian rationals, if one exists. The returned
/// root has positive real part, or zero real part and nonnegative imaginary
/// part.
std::optional<GaussianRational> sqrt_exact(const GaussianRational& x);

class QuadraticExtension {
 public:
  /// Throws MathError when D is zero or a perfect square (the extension would
  /// not be a field).
  explicit QuadraticExtension(GaussianRational discriminant);
  const GaussianRational& discriminant() const noexcept { return d_; }

 private:
  GaussianRational d_;
};

using ExtensionHandle = std::shared_ptr<const QuadraticExtension>;

ExtensionHandle make_extension(const GaussianRational& discriminant);
bool same_extension(const ExtensionHandle& a, const ExtensionHandle& b);

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : base_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational v) : base_(std::move(v)) {}  // NOLINT
  ExactScalar(GaussianRational v) : base_(std::move(v)) {}  // NOLINT
  ExactScalar(GaussianRational base, GaussianRational surd, ExtensionHandle ext);

  static ExactScalar rational(long num, long den = 1) { return {make_rational(num, den)}; }
  static ExactScalar i() { return {GaussianRational::i()}; }
  /// The element sqrt(D) of the given extension.
  static ExactScalar root_of(const ExtensionHandle& ext);

  const GaussianRational& base() const noexcept { return base_; }
  const GaussianRational& surd() const noexcept { return surd_; }
  const ExtensionHandle& extension() const noexcept { return ext_; }

  bool is_zero() const { return base_.is_zero() && surd_.is_zero(); }
  bool in_base_field() const { return surd_.is_zero(); }

  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  /// Throws ContextMismatch when both sides carry a surd part over different
  /// extensions.
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

 private:
  void adopt_extension(const ExtensionHandle& other);

  GaussianRational base_;
  GaussianRational surd_;
  ExtensionHandle ext_;
};

ExactScalar pow(ExactScalar x, unsigned n);

/// Square root of x inside x's field, or inside `ext` when x lies in the
/// base field and x * D is a square there. Returns the root chosen by the
/// sqrt_exact branch rule applied to the rational coordinate.
std::optional<ExactScalar> sqrt_in(const ExactScalar& x, const ExtensionHandle& ext = nullptr);

/// Text form: "<base>" or "<base>+(<surd>)*sqrt(<D>)".
std::string to_string(const ExactScalar& x);
std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Parses the text form produced by to_string, and more generally any
/// constant arithmetic expression (integers, i, + - * / ^, parentheses,
/// sqrt(...)). Throws ParseError with the offending position.
ExactScalar parse_scalar(std::string_view text);

}  // namespace bilattice
