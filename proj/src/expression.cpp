// Recursive-descent parser for the textual scalar and polynomial formats.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
//   factor := unary ('^' integer)?
//   unary  := '-' factor | atom
//   atom   := integer | 'i' | 'z' | 's' | 'sqrt' '(' expr ')' | '(' expr ')'

#include <cctype>

#include "bilattice/errors.hpp"
#include "bilattice/sigma_ring.hpp"

namespace bilattice {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Lattice lattice) : text_(text), lattice_(std::move(lattice)) {}

  SigmaPoly parse_all() {
    SigmaPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'z' || c == 's' || c == '(';
  }

  SigmaPoly expr() {
    SigmaPoly acc(lattice_);
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      SigmaPoly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  SigmaPoly term() {
    SigmaPoly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        SigmaPoly d = factor();
        if (d.degree() > 0) throw ParseError("division by a non-constant polynomial", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        try {
          acc *= SigmaScalar(1) / d.coeff(0);
        } catch (const DivisionByZero&) {
          throw ParseError("division by a zero divisor", at);
        }
      } else if (starts_atom()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  SigmaPoly factor() {
    SigmaPoly base = unary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      unsigned long e = integer_literal();
      if (e > 4096) throw ParseError("exponent too large", at);
      SigmaPoly r = SigmaPoly::constant(lattice_, SigmaScalar(1));
      for (unsigned long j = 0; j < e; ++j) r = r * base;
      return r;
    }
    return base;
  }

  SigmaPoly unary() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    return atom();
  }

  unsigned long integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  SigmaPoly atom() {
    char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer v(std::string(text_.substr(start, pos_ - start)));
      return SigmaPoly::constant(lattice_, SigmaScalar(ExactScalar(Rational(v))));
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      SigmaPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return SigmaPoly::constant(lattice_, SigmaScalar(square_root(inner, at)));
    }
    if (c == 'i') {
      ++pos_;
      return SigmaPoly::constant(lattice_, SigmaScalar(ExactScalar::i()));
    }
    if (c == 'z') {
      ++pos_;
      return SigmaPoly::z(lattice_);
    }
    if (c == 's') {
      ++pos_;
      return SigmaPoly::sigma(lattice_);
    }
    if (c == '(') {
      ++pos_;
      SigmaPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  ExactScalar square_root(const SigmaPoly& inner, std::size_t at) const {
    if (inner.degree() > 0 || !inner.is_sigma_free()) throw ParseError("sqrt of a non-constant", at);
    const ExactScalar x = inner.coeff(0).plain();
    if (!x.in_base_field()) throw ParseError("sqrt of a surd-bearing value", at);
    if (auto r = sqrt_exact(x.base())) return ExactScalar(*r);
    return ExactScalar::root_of(make_extension(x.base()));
  }

  std::string_view text_;
  Lattice lattice_;
  std::size_t pos_ = 0;
};

}  // namespace

SigmaPoly parse_sigma_poly(std::string_view text, Lattice lattice) {
  return Parser(text, std::move(lattice)).parse_all();
}

ExactScalar parse_scalar(std::string_view text) {
  static const Lattice kConstantLattice = make_lattice(ExactScalar{});
  SigmaPoly p = parse_sigma_poly(text, kConstantLattice);
  if (p.degree() > 0) throw ParseError("expected a constant, found a polynomial in z", 0);
  if (!p.is_sigma_free()) throw ParseError("expected a constant, found a multiple of s", 0);
  return p.coeff(0).plain();
}

}  // namespace bilattice
