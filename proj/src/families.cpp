#include "bilattice/families.hpp"

#include <algorithm>
#include <cctype>

#include "bilattice/errors.hpp"

namespace bilattice {

namespace {

const std::vector<std::pair<FamilyKind, std::string>>& kind_names() {
  static const std::vector<std::pair<FamilyKind, std::string>> names = {
      {FamilyKind::H, "H"},
      {FamilyKind::Q, "Q"},
      {FamilyKind::Meixner, "Meixner"},
      {FamilyKind::Charlier, "Charlier"},
      {FamilyKind::Krawtchouk, "Krawtchouk"},
      {FamilyKind::Hahn, "Hahn"},
      {FamilyKind::ParaKrawtchouk, "ParaKrawtchouk"},
  };
  return names;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

/// Nonnegative integer value of a parameter such as N.
long as_count(const ExactScalar& x, const char* name) {
  if (!x.in_base_field() || !x.base().is_real() || x.base().real().get_den() != 1 || sgn(x.base().real()) < 0 ||
      !x.base().real().get_num().fits_slong_p()) {
    throw MathError(std::string("parameter ") + name + " must be a nonnegative integer");
  }
  return x.base().real().get_num().get_si();
}

ExactScalar checked_div(const ExactScalar& num, const ExactScalar& den, int n) {
  if (den.is_zero()) throw DenominatorError("denominator vanishes", n);
  return num / den;
}

ExactScalar sq(const ExactScalar& x) { return x * x; }

std::pair<ExactScalar, ExactScalar> q_coefficients(const ExactScalar& a, const ExactScalar& p, const ExactScalar& q,
                                                   int n) {
  const ExactScalar N(n);
  const ExactScalar na = N + a;
  ExactScalar B;
  if (p.is_zero()) {
    B = ExactScalar{};
  } else if (n == 0) {
    B = checked_div(p, a, n);
  } else {
    B = checked_div((a - ExactScalar(1)) * p, na * (na - ExactScalar(1)), n);
  }
  ExactScalar r(1);
  if (n > 0) r = checked_div(N + ExactScalar(2) * a - ExactScalar(1), ExactScalar(2) * na - ExactScalar(1), n);
  ExactScalar G;
  if (p.is_zero()) {
    G = sq(na) - q;
  } else {
    const ExactScalar na2 = sq(na);
    G = checked_div(na2 * na2 - q * na2 + sq(p), na2, n);
  }
  const ExactScalar C = -ExactScalar(n + 1) * r * checked_div(G, ExactScalar(2) * na + ExactScalar(1), n);
  return {B, C};
}

}  // namespace

std::string to_string(FamilyKind kind) {
  for (const auto& [k, name] : kind_names()) {
    if (k == kind) return name;
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  const std::string key = lower(name);
  for (const auto& [k, n] : kind_names()) {
    if (lower(n) == key) return k;
  }
  throw Error("unknown family '" + name + "'");
}

const ExactScalar& FamilyDescriptor::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw MathError(to_string(kind) + " descriptor lacks parameter '" + name + "'");
  return it->second;
}

FamilyDescriptor FamilyDescriptor::H(ExactScalar a, ExactScalar b, std::optional<ExactScalar> root) {
  return {FamilyKind::H, {{"a", std::move(a)}, {"b", std::move(b)}}, std::move(root)};
}

FamilyDescriptor FamilyDescriptor::Q(ExactScalar a, ExactScalar b, ExactScalar c) {
  return {FamilyKind::Q, {{"a", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}}, std::nullopt};
}

FamilyDescriptor FamilyDescriptor::Q_symmetric(ExactScalar a, ExactScalar bc, ExactScalar b2_plus_c2) {
  return {FamilyKind::Q, {{"a", std::move(a)}, {"bc", std::move(bc)}, {"b2_plus_c2", std::move(b2_plus_c2)}},
          std::nullopt};
}

FamilyDescriptor FamilyDescriptor::meixner(ExactScalar beta, ExactScalar c) {
  return {FamilyKind::Meixner, {{"beta", std::move(beta)}, {"c", std::move(c)}}, std::nullopt};
}

FamilyDescriptor FamilyDescriptor::charlier(ExactScalar a) {
  return {FamilyKind::Charlier, {{"a", std::move(a)}}, std::nullopt};
}

FamilyDescriptor FamilyDescriptor::krawtchouk(ExactScalar p, long N) {
  return {FamilyKind::Krawtchouk, {{"p", std::move(p)}, {"N", ExactScalar(N)}}, std::nullopt};
}

FamilyDescriptor FamilyDescriptor::hahn(ExactScalar alpha, ExactScalar beta, long N) {
  return {FamilyKind::Hahn, {{"alpha", std::move(alpha)}, {"beta", std::move(beta)}, {"N", ExactScalar(N)}},
          std::nullopt};
}

FamilyDescriptor FamilyDescriptor::para_krawtchouk(ExactScalar mu, long N) {
  return {FamilyKind::ParaKrawtchouk, {{"mu", std::move(mu)}, {"N", ExactScalar(N)}}, std::nullopt};
}

ExactScalar h_root(const FamilyDescriptor& desc) {
  if (desc.root) return *desc.root;
  const ExactScalar shifted = desc.param("a") + ExactScalar(1);
  if (auto r = sqrt_in(shifted)) return *r;
  throw MathError("sqrt(a+1) = sqrt(" + to_string(shifted) + ") is not a Gaussian rational; supply the root");
}

std::pair<ExactScalar, ExactScalar> q_invariants(const FamilyDescriptor& desc) {
  if (desc.has("b") || desc.has("c")) {
    const ExactScalar& b = desc.param("b");
    const ExactScalar& c = desc.param("c");
    return {b * c, b * b + c * c};
  }
  return {desc.param("bc"), desc.param("b2_plus_c2")};
}

std::optional<int> finite_cutoff(const FamilyDescriptor& desc) {
  switch (desc.kind) {
    case FamilyKind::Krawtchouk:
    case FamilyKind::Hahn:
    case FamilyKind::ParaKrawtchouk:
      return static_cast<int>(as_count(desc.param("N"), "N"));
    default:
      return std::nullopt;
  }
}

std::pair<ExactScalar, ExactScalar> family_coefficients(const FamilyDescriptor& desc, int n) {
  const ExactScalar N(n);
  const ExactScalar one(1);
  const ExactScalar two(2);
  switch (desc.kind) {
    case FamilyKind::H: {
      const ExactScalar& a = desc.param("a");
      const ExactScalar& b = desc.param("b");
      return {-two * N * h_root(desc), (a * N + b) * (N + one)};
    }
    case FamilyKind::Q: {
      const auto [p, q] = q_invariants(desc);
      return q_coefficients(desc.param("a"), p, q, n);
    }
    case FamilyKind::Meixner: {
      const ExactScalar& beta = desc.param("beta");
      const ExactScalar& c = desc.param("c");
      const ExactScalar den = one - c;
      return {checked_div(N + (N + beta) * c, den, n), checked_div((N + one) * (N + beta), den * den, n)};
    }
    case FamilyKind::Charlier: {
      const ExactScalar& a = desc.param("a");
      return {N + a, a * (N + one)};
    }
    case FamilyKind::Krawtchouk: {
      const ExactScalar& p = desc.param("p");
      const ExactScalar& K = desc.param("N");
      return {N * (one - p) + p * (K - N), (p - one) * (N + one) * (N - K)};
    }
    case FamilyKind::Hahn: {
      const ExactScalar& al = desc.param("alpha");
      const ExactScalar& be = desc.param("beta");
      const ExactScalar& K = desc.param("N");
      const ExactScalar s = al + be;
      ExactScalar B = checked_div((N + al + one) * (K - N) * (N + s + one),
                                  (two * N + s + one) * (two * N + s + two), n);
      if (n > 0) {
        B += checked_div(N * (N + be) * (N + s + K + one), (two * N + s) * (two * N + s + one), n);
      }
      const ExactScalar num =
          (N + one) * (K - N) * (N + s + one) * (N + al + one) * (N + be + one) * (N + s + K + two);
      const ExactScalar den = (two * N + s + one) * sq(two * N + s + two) * (two * N + s + ExactScalar(3));
      return {B, checked_div(num, den, n)};
    }
    case FamilyKind::ParaKrawtchouk: {
      const ExactScalar& mu = desc.param("mu");
      const ExactScalar& K = desc.param("N");
      const ExactScalar num = (N + one) * (N - K) * (two * N + one - K - mu) * (two * N + one - K + mu);
      const ExactScalar den = ExactScalar(4) * (two * N - K) * (two * N - K + two);
      return {(K + mu - one) / two, -checked_div(num, den, n)};
    }
  }
  throw MathError("unknown family kind");
}

RecurrenceTable family_recurrence(const FamilyDescriptor& desc, int N) {
  if (N < 0) return {};
  if (auto cut = finite_cutoff(desc)) N = std::min(N, *cut);
  std::vector<ExactScalar> B;
  std::vector<ExactScalar> C;
  for (int n = 0; n <= N; ++n) {
    auto [b, c] = family_coefficients(desc, n);
    B.push_back(std::move(b));
    if (n < N) {
      if (c.is_zero()) throw RegularityError(to_string(desc.kind) + " coefficient C vanishes", n + 1);
      C.push_back(std::move(c));
    }
  }
  return {std::move(B), std::move(C)};
}

int max_valid_index(const FamilyDescriptor& desc, int horizon) {
  if (auto cut = finite_cutoff(desc)) horizon = std::min(horizon, *cut);
  int valid = -1;
  for (int n = 0; n <= horizon; ++n) {
    try {
      auto [b, c] = family_coefficients(desc, n);
      valid = n;
      if (c.is_zero()) break;
    } catch (const DenominatorError&) {
      break;
    }
  }
  return valid;
}

AffineMap AffineMap::inverse() const {
  if (lambda.is_zero()) throw MathError("affine map with lambda = 0");
  const ExactScalar inv = lambda.inverse();
  return {inv, -mu * inv};
}

RecurrenceTable affine_transform(const RecurrenceTable& table, const AffineMap& map) {
  if (map.lambda.is_zero()) throw MathError("affine map with lambda = 0");
  std::vector<ExactScalar> B;
  std::vector<ExactScalar> C;
  const ExactScalar l2 = map.lambda * map.lambda;
  for (const auto& b : table.B()) B.push_back(map.lambda * b + map.mu);
  for (const auto& c : table.C()) C.push_back(l2 * c);
  return {std::move(B), std::move(C), table.m0()};
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"meixner-h", "charlier-h", "krawtchouk-h", "hahn-q",
                                                 "para-krawtchouk-q"};
  return names;
}

std::string canonical_identity(const std::string& name) {
  const std::string key = lower(name);
  for (const auto& n : identity_names()) {
    const std::string full = lower(n);
    if (key == full || key == full.substr(0, full.size() - 1)) return n;
  }
  throw Error("unknown identity '" + name + "'");
}

namespace {

const ExactScalar& need(const std::map<std::string, ExactScalar>& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw Error("identity needs parameter '" + name + "'");
  return it->second;
}

std::vector<int> compare(const RecurrenceTable& x, const RecurrenceTable& y) {
  std::vector<int> bad;
  for (int n = 0; n <= x.checked_to(); ++n) {
    const bool b_ok = x.B()[n] == y.B()[n];
    const bool c_ok = n == 0 || x.C_at(n) == y.C_at(n);
    if (!b_ok || !c_ok) bad.push_back(n);
  }
  return bad;
}

/// Root of the extension that holds sqrt(x), or null when x is a square.
ExtensionHandle extension_for(const ExactScalar& x) {
  if (!x.in_base_field()) throw MathError("discriminant must lie in the base field");
  if (sqrt_exact(x.base())) return nullptr;
  return make_extension(x.base());
}

ExactScalar root_in(const ExactScalar& x, const ExtensionHandle& ext) {
  auto r = sqrt_in(x, ext);
  if (!r) throw MathError("sqrt(" + to_string(x) + ") is not representable in the chosen extension");
  return *r;
}

}  // namespace

IdentityReport verify_identity(const std::string& name, const std::map<std::string, ExactScalar>& params, int N) {
  IdentityReport rep;
  rep.identity = canonical_identity(name);
  rep.params = params;
  const ExactScalar one(1);
  const ExactScalar two(2);
  const ExactScalar four(4);
  std::optional<std::pair<ExactScalar, ExactScalar>> h_params;  // (a_H, b_H) for sign-ambiguous identities
  ExtensionHandle ext;

  if (rep.identity == "charlier-h") {
    const ExactScalar& a = need(params, "a");
    rep.source = FamilyDescriptor::charlier(a);
    h_params = {{ExactScalar{}, four * a}};
    rep.map = {ExactScalar::rational(-1, 2), a};
  } else if (rep.identity == "meixner-h") {
    const ExactScalar& beta = need(params, "beta");
    const ExactScalar& c = need(params, "c");
    rep.source = FamilyDescriptor::meixner(beta, c);
    const ExactScalar den = (c + ExactScalar(3)) * (c - one);
    if (den.is_zero()) throw DenominatorError("(c+3)(c-1) vanishes", 0);
    const ExactScalar D = (c + ExactScalar(3)) / (c - one);
    ext = extension_for(D);
    h_params = {{four / den, four * beta / den}};
    rep.map = {root_in(D, ext) / two, checked_div(beta * c, one - c, 0)};
  } else if (rep.identity == "krawtchouk-h") {
    const ExactScalar& p = need(params, "p");
    const long K = as_count(need(params, "N"), "N");
    rep.source = FamilyDescriptor::krawtchouk(p, K);
    const ExactScalar E = four * (p - one) * (p - one) + one;
    if (E.is_zero()) throw DenominatorError("4(p-1)^2 + 1 vanishes", 0);
    ext = extension_for(E);
    h_params = {{four * (p - one) / E, four * (one - p) * ExactScalar(K) / E}};
    rep.map = {-root_in(E, ext) / two, p * ExactScalar(K)};
  } else if (rep.identity == "hahn-q") {
    const ExactScalar& al = need(params, "alpha");
    const ExactScalar& be = need(params, "beta");
    const long K = as_count(need(params, "N"), "N");
    const ExactScalar KK(K);
    rep.source = FamilyDescriptor::hahn(al, be, K);
    rep.target = FamilyDescriptor::Q((al + be + two) / two, (al - be) / two, (al + be + two * KK + two) / two);
    rep.map = {ExactScalar::rational(1, 2), KK / two - (al - be) / four};
  } else if (rep.identity == "para-krawtchouk-q") {
    const ExactScalar& mu = need(params, "mu");
    const long K = as_count(need(params, "N"), "N");
    const ExactScalar KK(K);
    rep.source = FamilyDescriptor::para_krawtchouk(mu, K);
    rep.target = FamilyDescriptor::Q((one - KK) / two, mu / two, ExactScalar{});
    rep.map = {one, (KK + mu - one) / two};
  }

  int horizon = N;
  if (auto cut = finite_cutoff(rep.source)) horizon = std::min(horizon, *cut);
  rep.checked_to = horizon;
  const RecurrenceTable source = family_recurrence(rep.source, horizon);

  if (!h_params) {
    rep.failures = compare(source, affine_transform(family_recurrence(rep.target, horizon), rep.map));
    return rep;
  }

  const ExactScalar principal = root_in(h_params->first + one, ext);
  std::optional<std::size_t> chosen;
  for (const ExactScalar& r : {principal, -principal}) {
    const FamilyDescriptor target = FamilyDescriptor::H(h_params->first, h_params->second, r);
    const RecurrenceTable image = affine_transform(family_recurrence(target, horizon), rep.map);
    SignReport sr{r, compare(source, image), false};
    // B'_1 fixes the sign; with horizon 0 fall back to the first passing sign.
    const bool matches = horizon >= 1 ? image.B()[1] == source.B()[1] : sr.failures.empty();
    if (matches && !chosen) {
      chosen = rep.signs.size();
      sr.selected = true;
      rep.target = target;
    }
    rep.signs.push_back(std::move(sr));
    if (principal.is_zero()) break;
  }
  if (!chosen) {
    chosen = 0;
    rep.signs[0].selected = true;
    rep.target = FamilyDescriptor::H(h_params->first, h_params->second, rep.signs[0].root);
  }
  rep.failures = rep.signs[*chosen].failures;
  return rep;
}

std::pair<ExactScalar, ExactScalar> q_coefficients_literal(const ExactScalar& a, const ExactScalar& b,
                                                           const ExactScalar& c, int n) {
  const ExactScalar N(n);
  const ExactScalar one(1);
  const ExactScalar two(2);
  const ExactScalar na = N + a;
  // n = 0: (a-1)/(a(a-1)) -> 1/a and (2a-1)/(2a-1) -> 1.
  const ExactScalar B = n == 0 ? checked_div(b * c, a, n) : checked_div((a - one) * b * c, na * (na - one), n);
  const ExactScalar num = (N + one) * (na + b) * (na - b) * (na + c) * (na - c);
  ExactScalar C = -checked_div(num, na * na * (two * na + one), n);
  if (n > 0) C = C * checked_div(N + two * a - one, two * na - one, n);
  return {B, C};
}

SymmetryReport q_symmetry_check(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c, int N) {
  SymmetryReport rep;
  const std::vector<std::pair<ExactScalar, ExactScalar>> variants = {{b, c}, {c, b}, {-c, -b}};
  for (const auto& [x, y] : variants) {
    std::vector<ExactScalar> B;
    std::vector<ExactScalar> C;
    for (int n = 0; n <= N; ++n) {
      auto [bn, cn] = q_coefficients_literal(a, x, y, n);
      B.push_back(std::move(bn));
      if (n < N) C.push_back(std::move(cn));
    }
    rep.tables.emplace_back(std::move(B), std::move(C));
  }
  rep.identical = rep.tables[0] == rep.tables[1] && rep.tables[0] == rep.tables[2];
  rep.checked_to = N;
  return rep;
}

PearsonPair pearson_pair_for(const FamilyDescriptor& desc, const Lattice& lattice, const ExactScalar& mu) {
  Poly phi;
  Poly psi;
  if (desc.kind == FamilyKind::H) {
    phi = Poly({-desc.param("b"), h_root(desc)});
    psi = Poly::z();
  } else if (desc.kind == FamilyKind::Q) {
    const ExactScalar& a = desc.param("a");
    const auto [p, q] = q_invariants(desc);
    phi = Poly({a * a - q, ExactScalar{}, ExactScalar(1)});
    psi = Poly({-ExactScalar(2) * p, ExactScalar(2) * a});
  } else {
    throw MathError("Pearson pairs are provided for the H and Q families only");
  }
  return {phi.translate(-mu), psi.translate(-mu), lattice};
}

}  // namespace bilattice
