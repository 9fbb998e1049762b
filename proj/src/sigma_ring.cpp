#include "bilattice/sigma_ring.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

Lattice make_lattice(const ExactScalar& gamma) { return std::make_shared<const LatticeContext>(gamma); }

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->gamma() == b->gamma();
}

SigmaScalar& SigmaScalar::operator+=(const SigmaScalar& o) {
  plain_ += o.plain_;
  sigma_ += o.sigma_;
  return *this;
}

SigmaScalar& SigmaScalar::operator-=(const SigmaScalar& o) {
  plain_ -= o.plain_;
  sigma_ -= o.sigma_;
  return *this;
}

SigmaScalar& SigmaScalar::operator*=(const SigmaScalar& o) {
  if (sigma_.is_zero() && o.sigma_.is_zero()) {
    plain_ *= o.plain_;
    return *this;
  }
  ExactScalar p = plain_ * o.plain_ + sigma_ * o.sigma_;
  ExactScalar s = plain_ * o.sigma_ + sigma_ * o.plain_;
  plain_ = std::move(p);
  sigma_ = std::move(s);
  return *this;
}

SigmaScalar& SigmaScalar::operator/=(const SigmaScalar& o) {
  if (o.sigma_.is_zero()) {
    if (o.plain_.is_zero()) throw DivisionByZero("division by zero");
    plain_ /= o.plain_;
    sigma_ /= o.plain_;
    return *this;
  }
  // (a + sigma b)^-1 = (a - sigma b) / (a^2 - b^2)
  ExactScalar den = o.plain_ * o.plain_ - o.sigma_ * o.sigma_;
  if (den.is_zero()) throw DivisionByZero("division by a zero divisor of the sigma ring");
  *this *= SigmaScalar(o.plain_ / den, -o.sigma_ / den);
  return *this;
}

std::string to_string(const SigmaScalar& x) {
  if (x.is_sigma_free()) return to_string(x.plain());
  std::string odd = "s*(" + to_string(x.sigma_part()) + ")";
  if (x.plain().is_zero()) return odd;
  return to_string(x.plain()) + "+" + odd;
}

SigmaPoly::SigmaPoly(Lattice lattice, Poly even, Poly odd)
    : lattice_(std::move(lattice)), even_(std::move(even)), odd_(std::move(odd)) {
  if (!lattice_) throw ContextMismatch("SigmaPoly requires a lattice");
}

SigmaPoly SigmaPoly::constant(Lattice lattice, const SigmaScalar& c) {
  return SigmaPoly(std::move(lattice), Poly::constant(c.plain()), Poly::constant(c.sigma_part()));
}

SigmaPoly SigmaPoly::z(Lattice lattice) { return SigmaPoly(std::move(lattice), Poly::z()); }

SigmaPoly SigmaPoly::monomial(Lattice lattice, unsigned k) {
  return SigmaPoly(std::move(lattice), Poly::monomial(k));
}

SigmaPoly SigmaPoly::sigma(Lattice lattice) {
  return SigmaPoly(std::move(lattice), Poly{}, Poly::constant(ExactScalar(1)));
}

void SigmaPoly::check_same(const SigmaPoly& o) const {
  if (!same_lattice(lattice_, o.lattice_)) {
    throw ContextMismatch("polynomials over lattices with gamma " + to_string(lattice_->gamma()) + " and " +
                          to_string(o.lattice_->gamma()) + " combined");
  }
}

SigmaScalar SigmaPoly::operator()(const SigmaScalar& at) const {
  SigmaScalar acc;
  const int deg = degree();
  for (int k = deg; k >= 0; --k) {
    acc *= at;
    acc += coeff(static_cast<std::size_t>(k));
  }
  return acc;
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
  check_same(o);
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

SigmaPoly& SigmaPoly::operator-=(const SigmaPoly& o) {
  check_same(o);
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

SigmaPoly& SigmaPoly::operator*=(const SigmaScalar& c) {
  if (c.is_sigma_free()) {
    even_ *= c.plain();
    odd_ *= c.plain();
    return *this;
  }
  Poly e = even_ * c.plain() + odd_ * c.sigma_part();
  Poly o = even_ * c.sigma_part() + odd_ * c.plain();
  even_ = std::move(e);
  odd_ = std::move(o);
  return *this;
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
  a.check_same(b);
  Poly e = a.even_ * b.even_;
  Poly o;
  if (!a.odd_.is_zero() && !b.odd_.is_zero()) e += a.odd_ * b.odd_;
  if (!b.odd_.is_zero()) o += a.even_ * b.odd_;
  if (!a.odd_.is_zero()) o += a.odd_ * b.even_;
  return SigmaPoly(a.lattice_, std::move(e), std::move(o));
}

SigmaPoly SigmaPoly::operator-() const { return SigmaPoly(lattice_, -even_, -odd_); }

bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
  a.check_same(b);
  return a.even_ == b.even_ && a.odd_ == b.odd_;
}

namespace {

// p(w) for w = (z + direction) + sigma * (-2 gamma), returned as (even, odd).
std::pair<Poly, Poly> substitute_shift(const Poly& p, int direction, const ExactScalar& gamma) {
  const Poly w_even({ExactScalar(direction), ExactScalar(1)});
  const ExactScalar w_odd = ExactScalar(-2) * gamma;
  Poly re;
  Poly ro;
  for (int k = p.degree(); k >= 0; --k) {
    // (re + sigma ro)(w_even + sigma w_odd)
    Poly ne = re * w_even + ro * w_odd;
    Poly no = re * w_odd + ro * w_even;
    ne += Poly::constant(p.coeff(static_cast<std::size_t>(k)));
    re = std::move(ne);
    ro = std::move(no);
  }
  return {std::move(re), std::move(ro)};
}

}  // namespace

SigmaPoly lattice_shift(const SigmaPoly& f, int direction) {
  const ExactScalar& gamma = f.gamma();
  auto [pe, po] = substitute_shift(f.even_part(), direction, gamma);
  auto [qe, qo] = substitute_shift(f.odd_part(), direction, gamma);
  // p(w) - sigma q(w) = (pe - qo) + sigma (po - qe)
  return SigmaPoly(f.lattice(), pe - qo, po - qe);
}

SigmaPoly apply_D(const SigmaPoly& f) {
  SigmaPoly r = lattice_shift(f, 1) - lattice_shift(f, -1);
  return r * SigmaScalar(ExactScalar::rational(1, 2));
}

SigmaPoly apply_S(const SigmaPoly& f) {
  SigmaPoly r = lattice_shift(f, 1) + lattice_shift(f, -1);
  return r * SigmaScalar(ExactScalar::rational(1, 2));
}

SigmaPoly apply_D_power(SigmaPoly f, unsigned n) {
  for (unsigned j = 0; j < n; ++j) f = apply_D(f);
  return f;
}

SigmaPoly leibniz_T(int n, int k, const SigmaPoly& f) {
  SigmaPoly zero(f.lattice());
  if (n < 0 || k < 0 || k > n) return zero;
  // row[j] = T_{m,j} f for the current m
  std::vector<SigmaPoly> row{f};
  for (int m = 1; m <= n; ++m) {
    const int width = std::min(m, k) + 1;
    std::vector<SigmaPoly> next;
    next.reserve(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) {
      SigmaPoly t = zero;
      if (j < static_cast<int>(row.size())) t += apply_S(row[static_cast<std::size_t>(j)]);
      if (j >= 1) t += apply_D(row[static_cast<std::size_t>(j - 1)]);
      next.push_back(std::move(t));
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::string to_string(const SigmaPoly& f) {
  if (f.odd_part().is_zero()) return to_string(f.even_part());
  std::string odd = "s*(" + to_string(f.odd_part()) + ")";
  if (f.even_part().is_zero()) return odd;
  return to_string(f.even_part()) + " + " + odd;
}

}  // namespace bilattice
