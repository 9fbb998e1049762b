#include "bilattice/scalar.hpp"

#include <ostream>

#include "bilattice/errors.hpp"

namespace bilattice {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& g) {
  const bool has_re = sgn(g.real()) != 0;
  const bool has_im = sgn(g.imag()) != 0;
  if (!has_im) return to_string(g.real());
  std::string out;
  if (has_re) out = to_string(g.real());
  const Rational& im = g.imag();
  if (sgn(im) > 0 && has_re) out += '+';
  if (im == 1) {
    out += "i";
  } else if (im == -1) {
    out += "-i";
  } else {
    out += to_string(im) + "i";
  }
  return out;
}

namespace {

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  Integer num = q.get_num();
  Integer den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<GaussianRational> sqrt_exact(const GaussianRational& x) {
  if (x.is_zero()) return GaussianRational{};
  // (u + iv)^2 = p + iq with u^2 - v^2 = p, 2uv = q, u^2 + v^2 = |x|.
  auto modulus = sqrt_rational(x.norm());
  if (!modulus) return std::nullopt;
  auto u = sqrt_rational((*modulus + x.real()) / 2);
  auto v = sqrt_rational((*modulus - x.real()) / 2);
  if (!u || !v) return std::nullopt;
  if (sgn(*u) == 0) return GaussianRational{Rational(0), *v};
  Rational vv = sgn(x.imag()) < 0 ? Rational(-*v) : *v;
  return GaussianRational{*u, vv};
}

QuadraticExtension::QuadraticExtension(GaussianRational discriminant) : d_(std::move(discriminant)) {
  if (d_.is_zero()) throw MathError("quadratic extension with zero discriminant");
  if (sqrt_exact(d_)) {
    throw MathError("discriminant " + to_string(d_) + " is a perfect square; no extension needed");
  }
}

ExtensionHandle make_extension(const GaussianRational& discriminant) {
  return std::make_shared<const QuadraticExtension>(discriminant);
}

bool same_extension(const ExtensionHandle& a, const ExtensionHandle& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->discriminant() == b->discriminant();
}

ExactScalar::ExactScalar(GaussianRational base, GaussianRational surd, ExtensionHandle ext)
    : base_(std::move(base)), surd_(std::move(surd)), ext_(std::move(ext)) {
  if (!ext_ && !surd_.is_zero()) {
    throw ContextMismatch("surd part given without a quadratic extension");
  }
}

ExactScalar ExactScalar::root_of(const ExtensionHandle& ext) {
  if (!ext) throw ContextMismatch("root_of requires an extension");
  return {GaussianRational{}, GaussianRational{1}, ext};
}

void ExactScalar::adopt_extension(const ExtensionHandle& other) {
  if (!other) return;
  if (!ext_) {
    ext_ = other;
    return;
  }
  if (ext_ != other && !(ext_->discriminant() == other->discriminant())) {
    throw ContextMismatch("scalars from extensions sqrt(" + to_string(ext_->discriminant()) +
                          ") and sqrt(" + to_string(other->discriminant()) + ") mixed");
  }
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  adopt_extension(o.ext_);
  base_ += o.base_;
  if (!o.surd_.is_zero()) surd_ += o.surd_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  adopt_extension(o.ext_);
  base_ -= o.base_;
  if (!o.surd_.is_zero()) surd_ -= o.surd_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  adopt_extension(o.ext_);
  if (surd_.is_zero() && o.surd_.is_zero()) {
    base_ *= o.base_;
    return *this;
  }
  // (x1 + y1 r)(x2 + y2 r) = x1 x2 + y1 y2 D + (x1 y2 + y1 x2) r
  GaussianRational b = base_ * o.base_ + surd_ * o.surd_ * ext_->discriminant();
  GaussianRational s = base_ * o.surd_ + surd_ * o.base_;
  base_ = std::move(b);
  surd_ = std::move(s);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (surd_.is_zero()) return {base_.inverse(), GaussianRational{}, ext_};
  // 1/(x + y r) = (x - y r) / (x^2 - y^2 D); the denominator is nonzero
  // because D is not a square.
  GaussianRational den = base_ * base_ - surd_ * surd_ * ext_->discriminant();
  GaussianRational inv = den.inverse();
  return {base_ * inv, -surd_ * inv, ext_};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (o.surd_.is_zero()) {
    adopt_extension(o.ext_);
    base_ /= o.base_;
    if (!surd_.is_zero()) surd_ /= o.base_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactScalar ExactScalar::operator-() const { return {-base_, -surd_, ext_}; }

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (!a.surd_.is_zero() && !b.surd_.is_zero() && !same_extension(a.ext_, b.ext_)) {
    throw ContextMismatch("comparing scalars from different extensions");
  }
  return a.base_ == b.base_ && a.surd_ == b.surd_;
}

ExactScalar pow(ExactScalar x, unsigned n) {
  ExactScalar result(1);
  while (n > 0) {
    if (n & 1U) result *= x;
    n >>= 1U;
    if (n > 0) x *= x;
  }
  return result;
}

std::optional<ExactScalar> sqrt_in(const ExactScalar& x, const ExtensionHandle& ext) {
  if (!x.in_base_field()) return std::nullopt;
  if (auto r = sqrt_exact(x.base())) return ExactScalar(*r, GaussianRational{}, x.extension());
  ExtensionHandle target = x.extension() ? x.extension() : ext;
  if (!target) return std::nullopt;
  // sqrt(x) = sqrt(x D) / D * sqrt(D)
  const GaussianRational& d = target->discriminant();
  auto r = sqrt_exact(x.base() * d);
  if (!r) return std::nullopt;
  return ExactScalar(GaussianRational{}, *r / d, target);
}

std::string to_string(const ExactScalar& x) {
  if (x.surd().is_zero()) return to_string(x.base());
  std::string out;
  if (!x.base().is_zero()) out = to_string(x.base()) + "+";
  out += "(" + to_string(x.surd()) + ")*sqrt(" + to_string(x.extension()->discriminant()) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << to_string(x); }

}  // namespace bilattice
