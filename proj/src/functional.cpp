#include "bilattice/functional.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

namespace {

void check_parity(int parity) {
  if (parity != 1 && parity != -1) throw MathError("parity must be +1 or -1");
}

SigmaScalar twist(const SigmaScalar& m, int parity) {
  SigmaScalar s = SigmaScalar::sigma() * m;
  return parity > 0 ? s : -s;
}

SigmaScalar scale(const ExactScalar& c, const SigmaScalar& m) { return SigmaScalar(c) * m; }

}  // namespace

MomentFunctional::MomentFunctional(Lattice lattice, std::vector<SigmaScalar> moments, int parity)
    : lattice_(std::move(lattice)), moments_(std::move(moments)) {
  check_parity(parity);
  twisted_.reserve(moments_.size());
  for (const auto& m : moments_) twisted_.push_back(twist(m, parity));
}

MomentFunctional::MomentFunctional(Lattice lattice, std::vector<SigmaScalar> moments,
                                   std::vector<SigmaScalar> twisted)
    : lattice_(std::move(lattice)), moments_(std::move(moments)), twisted_(std::move(twisted)) {
  if (moments_.size() != twisted_.size()) throw MathError("moment tables of different lengths");
}

const SigmaScalar& MomentFunctional::moment(int k) const {
  if (k < 0 || k > order()) throw TruncationError("moment beyond truncation order", k);
  return moments_[static_cast<std::size_t>(k)];
}

const SigmaScalar& MomentFunctional::twisted_moment(int k) const {
  if (k < 0 || k > order()) throw TruncationError("moment beyond truncation order", k);
  return twisted_[static_cast<std::size_t>(k)];
}

bool MomentFunctional::moments_sigma_free() const {
  for (const auto& m : moments_) {
    if (!m.is_sigma_free()) return false;
  }
  return true;
}

bool MomentFunctional::is_sigma_linear(int parity) const {
  check_parity(parity);
  for (std::size_t k = 0; k < moments_.size(); ++k) {
    if (!(twisted_[k] == twist(moments_[k], parity))) return false;
  }
  return true;
}

MomentFunctional MomentFunctional::truncated(int order) const {
  if (order > this->order()) throw TruncationError("truncation beyond order", order);
  const auto n = static_cast<std::size_t>(std::max(order + 1, 0));
  return {lattice_, std::vector<SigmaScalar>(moments_.begin(), moments_.begin() + n),
          std::vector<SigmaScalar>(twisted_.begin(), twisted_.begin() + n)};
}

MomentFunctional& MomentFunctional::operator+=(const MomentFunctional& o) {
  if (!same_lattice(lattice_, o.lattice_)) throw ContextMismatch("functionals over different lattices");
  const std::size_t n = std::min(moments_.size(), o.moments_.size());
  moments_.resize(n);
  twisted_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    moments_[k] += o.moments_[k];
    twisted_[k] += o.twisted_[k];
  }
  return *this;
}

MomentFunctional& MomentFunctional::operator-=(const MomentFunctional& o) {
  if (!same_lattice(lattice_, o.lattice_)) throw ContextMismatch("functionals over different lattices");
  const std::size_t n = std::min(moments_.size(), o.moments_.size());
  moments_.resize(n);
  twisted_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    moments_[k] -= o.moments_[k];
    twisted_[k] -= o.twisted_[k];
  }
  return *this;
}

MomentFunctional& MomentFunctional::operator*=(const SigmaScalar& c) {
  for (auto& m : moments_) m *= c;
  for (auto& m : twisted_) m *= c;
  return *this;
}

SigmaScalar pair(const MomentFunctional& u, const SigmaPoly& f) {
  if (!same_lattice(u.lattice(), f.lattice())) throw ContextMismatch("pairing across lattices");
  if (f.degree() > u.order()) throw TruncationError("pairing needs a moment beyond truncation order", f.degree());
  SigmaScalar acc;
  const auto& even = f.even_part().coeffs();
  const auto& odd = f.odd_part().coeffs();
  for (std::size_t k = 0; k < even.size(); ++k) {
    if (!even[k].is_zero()) acc += scale(even[k], u.moments()[k]);
  }
  for (std::size_t k = 0; k < odd.size(); ++k) {
    if (!odd[k].is_zero()) acc += scale(odd[k], u.twisted()[k]);
  }
  return acc;
}

namespace {

template <typename Op>
MomentFunctional transpose(const MomentFunctional& u, Op op, bool negate) {
  const Lattice& lat = u.lattice();
  std::vector<SigmaScalar> m;
  std::vector<SigmaScalar> t;
  const int N = u.order();
  for (int k = 0; k <= N; ++k) {
    const SigmaPoly zk = SigmaPoly::monomial(lat, static_cast<unsigned>(k));
    SigmaScalar a = pair(u, op(zk));
    SigmaScalar b = pair(u, op(SigmaPoly::sigma(lat) * zk));
    m.push_back(negate ? -a : a);
    t.push_back(negate ? -b : b);
  }
  return {lat, std::move(m), std::move(t)};
}

}  // namespace

MomentFunctional dual_D(const MomentFunctional& u) {
  return transpose(u, [](const SigmaPoly& f) { return apply_D(f); }, true);
}

MomentFunctional dual_S(const MomentFunctional& u) {
  return transpose(u, [](const SigmaPoly& f) { return apply_S(f); }, false);
}

MomentFunctional dual_D_power(MomentFunctional u, unsigned n) {
  for (unsigned j = 0; j < n; ++j) u = dual_D(u);
  return u;
}

MomentFunctional left_mul(const SigmaPoly& f, const MomentFunctional& u) {
  if (!same_lattice(u.lattice(), f.lattice())) throw ContextMismatch("multiplying across lattices");
  const int order = u.order() - std::max(f.degree(), 0);
  if (order < 0) throw TruncationError("product needs a moment beyond truncation order", u.order() + 1);
  const Lattice& lat = u.lattice();
  std::vector<SigmaScalar> m;
  std::vector<SigmaScalar> t;
  for (int k = 0; k <= order; ++k) {
    const SigmaPoly g = f * SigmaPoly::monomial(lat, static_cast<unsigned>(k));
    m.push_back(pair(u, g));
    t.push_back(pair(u, SigmaPoly::sigma(lat) * g));
  }
  return {lat, std::move(m), std::move(t)};
}

MomentFunctional solve_twisted_pearson(const SigmaPoly& phi, const SigmaPoly& psi, const SigmaScalar& m0, int N,
                                       int parity) {
  check_parity(parity);
  if (!same_lattice(phi.lattice(), psi.lattice())) throw ContextMismatch("phi and psi over different lattices");
  if (N < 0) throw MathError("order must be nonnegative");
  const Lattice& lat = phi.lattice();
  std::vector<SigmaScalar> m{m0};
  std::vector<SigmaScalar> t{twist(m0, parity)};
  for (int n = 1; n <= N; ++n) {
    const SigmaPoly zn1 = SigmaPoly::monomial(lat, static_cast<unsigned>(n - 1));
    const SigmaPoly f = phi * apply_D(zn1) + psi * apply_S(zn1);
    if (f.degree() > n) throw MathError("phi or psi has too high a degree");
    SigmaScalar known;
    const auto& even = f.even_part().coeffs();
    const auto& odd = f.odd_part().coeffs();
    for (int k = 0; k < n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (uk < even.size() && !even[uk].is_zero()) known += scale(even[uk], m[uk]);
      if (uk < odd.size() && !odd[uk].is_zero()) known += scale(odd[uk], t[uk]);
    }
    // <u, f> = K m_n + known, with twisted_n = parity sigma m_n.
    const ExactScalar odd_n = f.odd_part().coeff(static_cast<std::size_t>(n));
    const SigmaScalar K(f.even_part().coeff(static_cast<std::size_t>(n)), parity > 0 ? odd_n : -odd_n);
    SigmaScalar mn;
    try {
      mn = -known / K;
    } catch (const DivisionByZero&) {
      throw AdmissibilityError("pivot of the moment relation vanishes (d_{n-1} = 0)", n - 1);
    }
    t.push_back(twist(mn, parity));
    m.push_back(std::move(mn));
  }
  return {lat, std::move(m), std::move(t)};
}

MomentFunctional solve_pearson_moments(const PearsonPair& pair, const SigmaScalar& m0, int N) {
  // Report the index the caller can act on: the first vanishing d_n.
  for (int n = 0; n < N; ++n) {
    if (pair.d_n(n).is_zero()) throw AdmissibilityError("d_n = a n + d vanishes", n);
  }
  return solve_twisted_pearson(pair.phi_sigma(), pair.psi_sigma(), m0, N, 1);
}

ExactScalar determinant(std::vector<std::vector<ExactScalar>> rows) {
  const std::size_t n = rows.size();
  ExactScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return ExactScalar{};
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    const ExactScalar inv = rows[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      const ExactScalar factor = rows[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

HankelReport hankel_oracle(const MomentFunctional& u, int N) {
  if (N < 0) throw MathError("order must be nonnegative");
  if (u.order() < 2 * N + 1) throw TruncationError("Hankel oracle needs moments up to 2N+1", 2 * N + 1);
  std::vector<ExactScalar> m;
  for (int k = 0; k <= 2 * N + 1; ++k) {
    const SigmaScalar& mk = u.moment(k);
    if (!mk.is_sigma_free()) throw SigmaResidueError("moment carries a sigma part", k);
    m.push_back(mk.plain());
  }
  HankelReport report;
  for (int n = 0; n <= N; ++n) {
    const auto size = static_cast<std::size_t>(n + 1);
    std::vector<std::vector<ExactScalar>> H(size, std::vector<ExactScalar>(size));
    std::vector<std::vector<ExactScalar>> Hs(size, std::vector<ExactScalar>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        H[i][j] = m[i + j];
        Hs[i][j] = j + 1 < size ? m[i + j] : m[i + size];
      }
    }
    report.delta.push_back(determinant(std::move(H)));
    report.delta_shifted.push_back(determinant(std::move(Hs)));
  }
  int R = -1;
  while (R < N && !report.delta[static_cast<std::size_t>(R + 1)].is_zero()) ++R;
  report.regular_up_to = R;
  if (R < 0) return report;

  auto delta = [&](int n) { return n < 0 ? ExactScalar(1) : report.delta[static_cast<std::size_t>(n)]; };
  auto shifted = [&](int n) { return n < 0 ? ExactScalar{} : report.delta_shifted[static_cast<std::size_t>(n)]; };
  std::vector<ExactScalar> B;
  std::vector<ExactScalar> C;
  for (int n = 0; n <= R; ++n) {
    B.push_back(shifted(n) / delta(n) - shifted(n - 1) / delta(n - 1));
    if (n >= 1) {
      const ExactScalar prev = delta(n - 1);
      C.push_back(delta(n) * delta(n - 2) / (prev * prev));
    }
  }
  report.table = RecurrenceTable(std::move(B), std::move(C), m[0]);
  return report;
}

}  // namespace bilattice
