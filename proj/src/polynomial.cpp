#include "bilattice/polynomial.hpp"

#include <algorithm>

namespace bilattice {

Poly::Poly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<ExactScalar> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const ExactScalar& c) { return Poly({c}); }

Poly Poly::monomial(unsigned degree, const ExactScalar& c) {
  std::vector<ExactScalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactScalar Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExactScalar{}; }

ExactScalar Poly::leading() const { return coeffs_.empty() ? ExactScalar{} : coeffs_.back(); }

ExactScalar Poly::operator()(const ExactScalar& x) const {
  ExactScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Poly Poly::translate(const ExactScalar& shift) const { return compose_affine(ExactScalar(1), shift); }

Poly Poly::compose_affine(const ExactScalar& scale, const ExactScalar& shift) const {
  const Poly inner({shift, scale});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

namespace {

bool needs_parens(const ExactScalar& c) {
  return !c.in_base_field() || (!c.base().is_real() && sgn(c.base().real()) != 0);
}

}  // namespace

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const ExactScalar& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string term;
    std::string cs = to_string(c);
    if (needs_parens(c)) cs = "(" + cs + ")";
    if (k == 0) {
      term = cs;
    } else {
      std::string power(1, var);
      if (k > 1) power += "^" + std::to_string(k);
      if (c == ExactScalar(1)) {
        term = power;
      } else if (c == ExactScalar(-1)) {
        term = "-" + power;
      } else {
        term = cs + "*" + power;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace bilattice
