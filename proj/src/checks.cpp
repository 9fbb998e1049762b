#include "bilattice/checks.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "bilattice/classifier.hpp"
#include "bilattice/errors.hpp"
#include "bilattice/functional.hpp"

namespace bilattice::checks {

const std::vector<Fixture>& regular_fixtures() {
  static const std::vector<Fixture> f = {
      {"H(0,2)", "z - 2", "z"},
      {"H(3,-1)", "2z + 1", "z"},
      {"Q(1/2,1/3,1/5)", "z^2 + 89/900", "z - 2/15"},
      {"Q(3/2,1/4,2/3)", "z^2 + 251/144", "3z - 1/3"},
      {"generic-Q", "z^2/2 + z - 1", "2z + 1/3"},
      {"complex-H", "(1+i)z - 1", "z + i/2"},
  };
  return f;
}

const std::vector<FailingFixture>& failing_fixtures() {
  static const std::vector<FailingFixture> f = {
      {{"constant-phi", "-3", "z + 2"}, 3, RegularityCondition::Nondegeneracy},
      {{"linear-phi", "2z + 8", "z + 1"}, 2, RegularityCondition::Nondegeneracy},
      {{"degenerate", "z", "z"}, 0, RegularityCondition::Nondegeneracy},
      {{"d3-vanishes", "-z^2/3 + 1", "z"}, 1, RegularityCondition::Admissibility},
  };
  return f;
}

const std::vector<std::string>& gamma_grid() {
  static const std::vector<std::string> g = {"0", "1/3", "i/2"};
  return g;
}

PearsonPair fixture_pair(const Fixture& f, const Lattice& lattice) {
  const SigmaPoly phi = parse_sigma_poly(f.phi, lattice);
  const SigmaPoly psi = parse_sigma_poly(f.psi, lattice);
  if (!phi.is_sigma_free() || !psi.is_sigma_free()) throw MathError("fixture pair must be sigma-free");
  return {phi.even_part(), psi.even_part(), lattice};
}

const std::vector<std::pair<int, std::string>>& criteria() {
  static const std::vector<std::pair<int, std::string>> c = {
      {1, "operator calculus identities"},
      {2, "expansion tables of D z^n and S z^n"},
      {3, "Leibniz formula and T_{n,k} closed forms"},
      {4, "closed-form recurrence vs Hankel oracle"},
      {5, "sigma-cancellation in moments, P_n and t_n"},
      {6, "Rodrigues formula"},
      {7, "iterated pairs"},
      {8, "classical family identities"},
      {9, "classification round-trip"},
      {10, "gamma-independence of recurrence tables"},
  };
  return c;
}

namespace {

/// Collects failures; a criterion passes when none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void count(long n) { checks_ += n; }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& scope) const {
    std::ostringstream os;
    os << checks_ << " exact checks over " << scope;
    if (failed_ > 0) {
      os << "; " << failed_ << " failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    return os.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

  ExactScalar rational() { return ExactScalar::rational(integer(-9, 9), integer(1, 6)); }

  ExactScalar gaussian() {
    if (integer(0, 2) == 0) return rational();
    return ExactScalar(GaussianRational(rational().base().real(), rational().base().real()));
  }

  Poly poly(int max_degree) {
    std::vector<ExactScalar> c;
    const long deg = integer(0, max_degree);
    for (long k = 0; k <= deg; ++k) c.push_back(integer(0, 3) == 0 ? ExactScalar{} : gaussian());
    return Poly(std::move(c));
  }

  SigmaPoly sigma_poly(const Lattice& lat, int max_degree) {
    Poly odd = integer(0, 2) == 0 ? Poly{} : poly(max_degree);
    return SigmaPoly(lat, poly(max_degree), std::move(odd));
  }

  std::vector<SigmaScalar> sigma_scalars(int n) {
    std::vector<SigmaScalar> out;
    for (int k = 0; k < n; ++k) out.emplace_back(gaussian(), gaussian());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

Lattice lattice_of(const std::string& gamma) { return make_lattice(parse_scalar(gamma)); }

std::string label(const Fixture& f, const std::string& gamma) { return f.name + " @ gamma=" + gamma; }

bool same_functional(const MomentFunctional& x, const MomentFunctional& y, int upto) {
  for (int k = 0; k <= upto; ++k) {
    if (!(x.moment(k) == y.moment(k)) || !(x.twisted_moment(k) == y.twisted_moment(k))) return false;
  }
  return true;
}

// --- 1 -------------------------------------------------------------------

CriterionResult operator_calculus(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const Lattice lat = make_lattice(rng.gaussian());
    const SigmaPoly f = rng.sigma_poly(lat, 8);
    const SigmaPoly g = rng.sigma_poly(lat, 8);
    const SigmaPoly Df = apply_D(f), Sf = apply_S(f), Dg = apply_D(g), Sg = apply_S(g);
    const std::string at = "trial " + std::to_string(trial);
    t.expect(apply_D(f * g) == Df * Sg + Sf * Dg, "D(fg) " + at);
    t.expect(apply_S(f * g) == Df * Dg + Sf * Sg, "S(fg) " + at);
    t.expect(apply_S(Df) == apply_D(Sf), "SD = DS " + at);
    t.expect(apply_S(Sf) == apply_D(Df) + f, "S^2 = D^2 + 1 " + at);
    t.expect(f * Sg == apply_S(g * Sf) - apply_D(g * Df), "f Sg " + at);
    t.expect(f * Dg == apply_D(g * Sf) - apply_S(g * Df), "f Dg " + at);
  }
  return {1, "", t.ok(), t.summary("200 random (f, g, gamma) triples, deg <= 8"), 0};
}

// --- 2 -------------------------------------------------------------------

CriterionResult expansion_tables(std::uint64_t) {
  Tally t;
  const std::vector<std::string> gammas = {"0", "1/3", "i/2", "-2/5", "3/2+1/7i"};
  for (const auto& gs : gammas) {
    const Lattice lat = lattice_of(gs);
    const ExactScalar g = lat->gamma();
    const ExactScalar g2 = g * g;
    const ExactScalar g4 = g2 * g2;
    const ExactScalar one(1);
    for (long n = 0; n <= 10; ++n) {
      const ExactScalar N(n);
      auto fall = [&](int k) {
        ExactScalar p(1);
        for (int j = 0; j < k; ++j) p *= N - ExactScalar(j);
        return p;
      };
      const SigmaScalar sigma = SigmaScalar::sigma();
      // Coefficients of D z^n at z^{n-1}..z^{n-5} and of S z^n at z^n..z^{n-4}.
      const std::vector<SigmaScalar> d_expected = {
          SigmaScalar(N),
          sigma * SigmaScalar(-ExactScalar(2) * fall(2) * g),
          SigmaScalar(fall(3) / ExactScalar(6) * (one + ExactScalar(12) * g2)),
          sigma * SigmaScalar(-g * fall(4) / ExactScalar(3) * (one + ExactScalar(4) * g2)),
          SigmaScalar(fall(5) / ExactScalar(120) * (one + ExactScalar(40) * g2 + ExactScalar(80) * g4)),
      };
      const std::vector<SigmaScalar> s_expected = {
          SigmaScalar(1),
          sigma * SigmaScalar(-ExactScalar(2) * N * g),
          SigmaScalar(fall(2) / ExactScalar(2) * (one + ExactScalar(4) * g2)),
          sigma * SigmaScalar(-g * fall(3) / ExactScalar(3) * (ExactScalar(4) * g2 + ExactScalar(3))),
          SigmaScalar(fall(4) / ExactScalar(24) * (one + ExactScalar(24) * g2 + ExactScalar(16) * g4)),
      };
      const SigmaPoly zn = SigmaPoly::monomial(lat, static_cast<unsigned>(n));
      const SigmaPoly Dz = apply_D(zn);
      const SigmaPoly Sz = apply_S(zn);
      for (long j = 0; j < 5; ++j) {
        const std::string at = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " gamma=" + gs;
        if (n - 1 - j >= 0) t.expect(Dz.coeff(static_cast<std::size_t>(n - 1 - j)) == d_expected[j], "D z^n " + at);
        if (n - j >= 0) t.expect(Sz.coeff(static_cast<std::size_t>(n - j)) == s_expected[j], "S z^n " + at);
      }
      t.expect(Dz.degree() == n - 1 || (n == 0 && Dz.is_zero()), "deg D z^n n=" + std::to_string(n));
    }
  }
  return {2, "", t.ok(), t.summary("n <= 10 and 5 gamma values"), 0};
}

// --- 3 -------------------------------------------------------------------

CriterionResult leibniz(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int trial = 0; trial < 12; ++trial) {
    const Lattice lat = make_lattice(rng.gaussian());
    const ExactScalar g = lat->gamma();
    const Poly fp = rng.poly(2);
    const SigmaPoly f(lat, fp);
    const ExactScalar a = fp.coeff(2);
    const SigmaPoly f1(lat, Poly({fp.coeff(1), ExactScalar(2) * a}));
    const SigmaPoly f2 = SigmaPoly::constant(lat, SigmaScalar(ExactScalar(2) * a));
    const SigmaScalar sigma = SigmaScalar::sigma();
    for (int n = 0; n <= 6; ++n) {
      const ExactScalar odd = n % 2 == 0 ? ExactScalar{} : ExactScalar(2);  // 1 - (-1)^n
      const SigmaScalar twist = sigma * SigmaScalar(g * odd);
      const SigmaPoly T0 = f - twist * f1 +
                           SigmaScalar((ExactScalar(n) + ExactScalar(2) * g * g * odd) / ExactScalar(2)) * f2;
      const SigmaPoly T1 = SigmaScalar(ExactScalar(n)) * (f1 - twist * f2);
      const SigmaPoly T2 = SigmaPoly::constant(lat, SigmaScalar(ExactScalar(n * (n - 1)) * a));
      const std::string at = "trial " + std::to_string(trial) + " n=" + std::to_string(n);
      t.expect(leibniz_T(n, 0, f) == T0, "T_{n,0} " + at);
      t.expect(leibniz_T(n, 1, f) == T1, "T_{n,1} " + at);
      t.expect(leibniz_T(n, 2, f) == T2, "T_{n,2} " + at);
      t.expect(leibniz_T(n, 3, f).is_zero(), "T_{n,3} " + at);
    }
  }
  // Functional form: D^n(f u) = sum_k T_{n,k} f D^{n-k} S^k u, for a generic
  // (not sigma-linear) functional u.
  for (int trial = 0; trial < 4; ++trial) {
    const Lattice lat = make_lattice(rng.gaussian());
    const int order = 12;
    const MomentFunctional u(lat, rng.sigma_scalars(order + 1), rng.sigma_scalars(order + 1));
    const SigmaPoly f(lat, rng.poly(2));
    std::vector<MomentFunctional> S_pow{u};
    for (int k = 1; k <= 6; ++k) S_pow.push_back(dual_S(S_pow.back()));
    for (int n = 0; n <= 6; ++n) {
      const MomentFunctional lhs = dual_D_power(left_mul(f, u), static_cast<unsigned>(n));
      MomentFunctional rhs(lat, std::vector<SigmaScalar>(order - 1), std::vector<SigmaScalar>(order - 1));
      for (int k = 0; k <= n; ++k) {
        rhs += left_mul(leibniz_T(n, k, f), dual_D_power(S_pow[k], static_cast<unsigned>(n - k)));
      }
      const int upto = std::min(lhs.order(), rhs.order());
      t.expect(upto >= order - 2 && same_functional(lhs, rhs, upto),
               "Leibniz functional trial " + std::to_string(trial) + " n=" + std::to_string(n));
    }
  }
  return {3, "", t.ok(), t.summary("n <= 6, deg f <= 2"), 0};
}

// --- 4 -------------------------------------------------------------------

CriterionResult oracle_equivalence(std::uint64_t) {
  Tally t;
  const Lattice lat = lattice_of("1/3");
  const int N = 8;
  for (const auto& fx : regular_fixtures()) {
    const PearsonPair p = fixture_pair(fx, lat);
    const RegularityVerdict v = regular(p, N);
    t.expect(v.ok, fx.name + " regular");
    const MomentFunctional u = solve_pearson_moments(p, SigmaScalar(1), 2 * (N + 1) + 1);
    const HankelReport h = hankel_oracle(u, N + 1);
    t.expect(h.regular_up_to == N + 1, fx.name + " oracle Delta_0..Delta_9 nonzero");
    const RecurrenceTable closed = recurrence_coeffs(p, N);
    t.expect(h.table.truncated(N) == closed, fx.name + " B_n, C_n");
    const ExactScalar C1 = -p.phi()(-p.e() / p.d()) / (p.d() + p.a());
    t.expect(h.table.C_at(1) == C1, fx.name + " C_1 formula");
  }
  for (const auto& ff : failing_fixtures()) {
    const PearsonPair p = fixture_pair(ff.pair, lat);
    const RegularityVerdict v = regular(p, N);
    const std::string& name = ff.pair.name;
    t.expect(!v.ok && v.failing_n == ff.failing_n && v.condition == ff.condition, name + " verdict");
    if (ff.condition == RegularityCondition::Nondegeneracy) {
      const int n = ff.failing_n;
      const MomentFunctional u = solve_pearson_moments(p, SigmaScalar(1), 2 * (n + 1) + 1);
      const HankelReport h = hankel_oracle(u, n + 1);
      t.expect(h.regular_up_to == n, name + " oracle first singular Delta at n+1");
      t.expect(h.table == recurrence_coeffs(p, n), name + " rows before the failure");
    } else {
      // The moment sequence itself stops at the vanishing d_j.
      const int j = v.d_index.value_or(0);
      bool threw = false;
      try {
        solve_pearson_moments(p, SigmaScalar(1), j + 1);
      } catch (const AdmissibilityError& e) {
        threw = e.index() == j;
      }
      t.expect(threw, name + " moment solver stops at d_j = 0");
      const int reach = (j - 1) / 2;
      const HankelReport h = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), j), reach);
      t.expect(h.regular_up_to == reach && h.table == recurrence_coeffs(p, reach), name + " oracle agrees up to reach");
    }
  }
  return {4, "", t.ok(), t.summary("6 regular and 4 failing fixtures, n <= 8, gamma = 1/3"), 0};
}

// --- 5 -------------------------------------------------------------------

/// Monic P_n from the moment table by elimination over sigma-scalars.
std::vector<SigmaScalar> monic_from_moments(const MomentFunctional& u, int n) {
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::vector<SigmaScalar>> M(size, std::vector<SigmaScalar>(size + 1));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) M[i][j] = u.moment(static_cast<int>(i + j));
    M[i][size] = -u.moment(static_cast<int>(i + size));
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && M[piv][col].is_zero()) ++piv;
    if (piv == size) throw MathError("singular moment matrix");
    std::swap(M[piv], M[col]);
    const SigmaScalar inv = SigmaScalar(1) / M[col][col];
    for (auto& x : M[col]) x *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      const SigmaScalar factor = M[r][col];
      for (std::size_t c = col; c <= size; ++c) M[r][c] -= factor * M[col][c];
    }
  }
  std::vector<SigmaScalar> coeffs;
  for (std::size_t i = 0; i < size; ++i) coeffs.push_back(M[i][size]);
  coeffs.emplace_back(1);
  return coeffs;
}

CriterionResult sigma_cancellation(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  std::vector<std::string> gammas = gamma_grid();
  gammas.push_back(to_string(rng.gaussian()));
  gammas.push_back(to_string(rng.gaussian()));
  const int N = 8;
  for (const auto& gs : gammas) {
    const Lattice lat = lattice_of(gs);
    for (const auto& fx : regular_fixtures()) {
      const PearsonPair p = fixture_pair(fx, lat);
      const std::string at = label(fx, gs);
      const MomentFunctional u = solve_pearson_moments(p, SigmaScalar(1), 2 * N);
      t.expect(u.moments_sigma_free(), at + " moments");
      const std::vector<Poly> P = generate_ops(recurrence_coeffs(p, N));
      for (int n = 1; n <= N; ++n) {
        const std::vector<SigmaScalar> c = monic_from_moments(u, n);
        bool free = true;
        bool equal = true;
        for (int k = 0; k <= n; ++k) {
          free = free && c[k].is_sigma_free();
          equal = equal && c[k].plain() == P[n].coeff(static_cast<std::size_t>(k));
        }
        t.expect(free, at + " P_" + std::to_string(n) + " sigma-free");
        t.expect(equal, at + " P_" + std::to_string(n) + " matches recurrence");
      }
      try {
        rodrigues(p, N);
        t.count(N);
      } catch (const SigmaResidueError& e) {
        t.expect(false, at + " " + e.what());
      }
    }
  }
  return {5, "", t.ok(), t.summary("6 regular fixtures at 5 gamma values"), 0};
}

// --- 6 -------------------------------------------------------------------

CriterionResult rodrigues_formula(std::uint64_t) {
  Tally t;
  const std::vector<std::size_t> chosen = {0, 1, 2, 4};
  for (const std::string gs : {"1/3", "i/2"}) {
    const Lattice lat = lattice_of(gs);
    for (std::size_t idx : chosen) {
      const Fixture& fx = regular_fixtures()[idx];
      const RodriguesCheck rc = rodrigues_check(fixture_pair(fx, lat), 6, 6);
      t.count(7 * 7 + 7 - 1);
      t.expect(rc.ok, label(fx, gs) + (rc.failures.empty() ? std::string() : ": " + rc.failures.front()));
      const RodriguesData rd = rodrigues(fixture_pair(fx, lat), 6);
      t.expect(rd.R[1] == -fixture_pair(fx, lat).psi(), label(fx, gs) + " R_1 = -psi");
    }
  }
  return {6, "", t.ok(), t.summary("4 fixtures at 2 gamma values, n, m <= 6"), 0};
}

// --- 7 -------------------------------------------------------------------

CriterionResult iterated_pairs(std::uint64_t) {
  Tally t;
  for (const auto& gs : gamma_grid()) {
    const Lattice lat = lattice_of(gs);
    for (const auto& fx : regular_fixtures()) {
      const PearsonPair p = fixture_pair(fx, lat);
      IteratedPair rec{0, p.phi_sigma(), p.psi_sigma()};
      for (int k = 0; k <= 8; ++k) {
        if (k > 0) {
          rec = {k, apply_S(rec.phi) + apply_D(rec.psi), apply_D(rec.phi) + apply_S(rec.psi)};
        }
        const IteratedPair closed = iterated_pair(p, k);
        const std::string at = label(fx, gs) + " k=" + std::to_string(k);
        t.expect(closed.phi == rec.phi && closed.psi == rec.psi, at + " closed form = recursion");
        t.expect(apply_S(apply_S(closed.psi)) == closed.psi, at + " S^2 psi = psi");
      }
    }
  }
  return {7, "", t.ok(), t.summary("6 fixtures at 3 gamma values, k <= 8"), 0};
}

// --- 8 -------------------------------------------------------------------

CriterionResult family_identities(std::uint64_t) {
  Tally t;
  using Params = std::map<std::string, ExactScalar>;
  auto q = [](const char* s) { return parse_scalar(s); };
  const std::vector<std::pair<std::string, std::vector<Params>>> grid = {
      {"meixner-h",
       {{{"beta", q("2")}, {"c", q("1/2")}},
        {{"beta", q("1/3")}, {"c", q("1/4")}},
        {{"beta", q("5/2")}, {"c", q("2/3")}},
        {{"beta", q("3")}, {"c", q("1/5")}}}},
      {"charlier-h", {{{"a", q("1")}}, {{"a", q("1/2")}}, {{"a", q("3")}}, {{"a", q("2+i")}}}},
      {"krawtchouk-h",
       {{{"p", q("1/2")}, {"N", q("5")}},
        {{"p", q("1/4")}, {"N", q("4")}},
        {{"p", q("2/5")}, {"N", q("7")}},
        {{"p", q("1/3")}, {"N", q("6")}}}},
      {"hahn-q",
       {{{"alpha", q("1")}, {"beta", q("2")}, {"N", q("4")}},
        {{"alpha", q("1/2")}, {"beta", q("1/3")}, {"N", q("6")}},
        {{"alpha", q("3")}, {"beta", q("1/4")}, {"N", q("10")}}}},
      {"para-krawtchouk-q",
       {{{"mu", q("1/2")}, {"N", q("5")}}, {{"mu", q("1")}, {"N", q("7")}}, {{"mu", q("3/2")}, {"N", q("9")}}}},
  };
  std::ostringstream signs;
  int surd_runs = 0;
  for (const auto& [name, points] : grid) {
    for (const auto& params : points) {
      const IdentityReport r = verify_identity(name, params, 10);
      t.count(r.checked_to + 1);
      std::ostringstream at;
      at << name;
      for (const auto& [k, v] : params) at << " " << k << "=" << to_string(v);
      t.expect(r.passed(), at.str());
      if (name == "meixner-h" || name == "krawtchouk-h") {
        // A zero root has a single sign.
        const std::size_t expected = !r.signs.empty() && r.signs.front().root.is_zero() ? 1 : 2;
        t.expect(r.signs.size() == expected, at.str() + " both signs evaluated");
        if (!r.map.lambda.in_base_field()) ++surd_runs;
      }
    }
  }
  t.expect(surd_runs >= 6, "Meixner/Krawtchouk runs inside a quadratic extension");
  return {8, "", t.ok(), t.summary("5 identities, >= 3 parameter points each, " + std::to_string(surd_runs) +
                                       " runs in a quadratic extension"), 0};
}

// --- 9 -------------------------------------------------------------------

bool q_symmetric_match(const FamilyDescriptor& x, const FamilyDescriptor& y) {
  if (x.kind != FamilyKind::Q || y.kind != FamilyKind::Q) return false;
  if (!(x.param("a") == y.param("a"))) return false;
  if (!x.has("b") || !y.has("b")) return q_invariants(x) == q_invariants(y);
  const ExactScalar &b = x.param("b"), &c = x.param("c");
  const ExactScalar &b2 = y.param("b"), &c2 = y.param("c");
  return (b2 == b && c2 == c) || (b2 == c && c2 == b) || (b2 == -c && c2 == -b) || (b2 == -b && c2 == -c);
}

CriterionResult classification_roundtrip(std::uint64_t) {
  Tally t;
  auto q = [](const char* s) { return parse_scalar(s); };
  const ExactScalar surd_root = ExactScalar::root_of(make_extension(GaussianRational(-2)));
  struct Item {
    FamilyDescriptor desc;
    ExactScalar mu;
    ClassCase expected;
  };
  const std::vector<Item> items = {
      {FamilyDescriptor::H(q("-1"), q("7/2"), ExactScalar{}), q("2"), ClassCase::DegPhi0},
      {FamilyDescriptor::H(q("-1"), q("1/2+i"), ExactScalar{}), q("-1/3"), ClassCase::DegPhi0},
      {FamilyDescriptor::H(q("0"), q("2")), q("0"), ClassCase::DegPhi1},
      {FamilyDescriptor::H(q("3"), q("-1")), q("1/5"), ClassCase::DegPhi1},
      {FamilyDescriptor::H(q("5/4"), q("1/3")), q("-2"), ClassCase::DegPhi1},
      {FamilyDescriptor::H(q("-3"), q("2"), surd_root), q("1"), ClassCase::DegPhi1},
      {FamilyDescriptor::Q(q("1/2"), q("1/3"), q("1/5")), q("0"), ClassCase::DegPhi2},
      {FamilyDescriptor::Q(q("3/2"), q("1/4"), q("2/3")), q("3/7"), ClassCase::DegPhi2},
      {FamilyDescriptor::Q(q("-2"), q("1/4"), q("0")), q("9/4"), ClassCase::DegPhi2},
      {FamilyDescriptor::Q(q("5/3"), q("1+i"), q("-1/2")), q("i"), ClassCase::DegPhi2},
      {FamilyDescriptor::Q_symmetric(q("7/4"), q("1/4"), q("1")), q("-1/2"), ClassCase::DegPhi2},
      {FamilyDescriptor::Q_symmetric(q("4/3"), q("2/7"), q("3")), q("0"), ClassCase::DegPhi2},
  };
  const Lattice lat = lattice_of("1/3");
  const AffineMap identity = AffineMap::identity();
  for (const Item& it : items) {
    std::ostringstream os;
    os << to_string(it.desc.kind);
    for (const auto& [k, v] : it.desc.params) os << " " << k << "=" << to_string(v);
    const std::string at = os.str();
    const PearsonPair p = pearson_pair_for(it.desc, lat, it.mu);
    const Classification cl = classify(p);
    t.expect(cl.kase == it.expected, at + " case");
    const int horizon = std::min(max_valid_index(it.desc, 10), max_valid_index(cl.descriptor, 10));
    t.expect(horizon >= 5, at + " valid range");
    const RecurrenceTable original = affine_transform(family_recurrence(it.desc, horizon), {ExactScalar(1), it.mu});
    const RecurrenceTable again = affine_transform(family_recurrence(cl.descriptor, horizon), cl.map);
    t.expect(original == again, at + " table round-trip");
    t.expect(affine_transform(again, cl.map.inverse()) == family_recurrence(cl.descriptor, horizon),
             at + " inverse map");
    if (it.desc.kind == FamilyKind::Q) t.expect(q_symmetric_match(it.desc, cl.descriptor), at + " Q-symmetry");
    if (cl.kase != ClassCase::DegPhi2) continue;

    t.expect(cl.map.mu == it.mu, at + " shift");
    if (cl.roots) {
      const auto& [r1, r2] = *cl.roots;
      t.expect(r1 * r2 == cl.b - ExactScalar(2) * cl.a * cl.e, at + " r1 r2");
      t.expect(r1 * r1 + r2 * r2 == cl.b * cl.b + ExactScalar(1) - ExactScalar(4) * cl.a * cl.c, at + " r1^2 + r2^2");
      // phi_4(n) = 4 (an + alpha1)(an + alpha2)(an + alpha3)(n + alpha4), coefficient-wise.
      const auto al = quartic_roots(p);
      const Poly product = Poly({ExactScalar(4) * al[0], ExactScalar(4) * cl.a}) * Poly({al[1], cl.a}) *
                           Poly({al[2], cl.a}) * Poly({al[3], ExactScalar(1)});
      t.expect(product == Poly(cl.quartic), at + " phi_4 factorization");
    }
    const RegularityVerdict v = regular(p, horizon);
    // Rows 0..N of the closed form use d_j for j <= 2N only.
    int reach = horizon;
    if (!v.ok) reach = v.d_index ? (*v.d_index - 1) / 2 : v.failing_n.value_or(0);
    if (reach >= 1) {
      const RecurrenceTable closed = recurrence_coeffs(p, reach);
      for (int n = 0; n < reach; ++n) {
        const auto [B, C] = case3_coefficients(p, n);
        t.expect(B == closed.B()[n] && C == closed.C_at(n + 1), at + " case-3 formulas n=" + std::to_string(n));
      }
    }
  }
  (void)identity;
  return {9, "", t.ok(), t.summary(std::to_string(items.size()) + " descriptors over cases 1-3, n <= 10"), 0};
}

// --- 10 ------------------------------------------------------------------

CriterionResult gamma_independence(std::uint64_t) {
  Tally t;
  const int N = 8;
  for (const auto& fx : regular_fixtures()) {
    std::vector<RecurrenceTable> tables;
    for (const auto& gs : gamma_grid()) {
      const PearsonPair p = fixture_pair(fx, lattice_of(gs));
      const HankelReport h = hankel_oracle(solve_pearson_moments(p, SigmaScalar(1), 2 * N + 1), N);
      t.expect(h.regular_up_to == N, label(fx, gs) + " oracle regular");
      tables.push_back(h.table);
      t.expect(recurrence_coeffs(p, N) == h.table, label(fx, gs) + " closed form");
    }
    t.expect(tables[0] == tables[1] && tables[0] == tables[2], fx.name + " identical across gamma");
  }
  return {10, "", t.ok(), t.summary("6 regular fixtures at gamma in {0, 1/3, i/2}"), 0};
}

using CriterionFn = std::function<CriterionResult(std::uint64_t)>;

const std::vector<CriterionFn>& table() {
  static const std::vector<CriterionFn> fns = {
      operator_calculus, expansion_tables, leibniz,         oracle_equivalence, sigma_cancellation,
      rodrigues_formula, iterated_pairs,   family_identities, classification_roundtrip, gamma_independence,
  };
  return fns;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > static_cast<int>(table().size())) throw Error("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table()[static_cast<std::size_t>(id - 1)](seed + static_cast<std::uint64_t>(id));
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.title = criteria()[static_cast<std::size_t>(id - 1)].second;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, bool parallel) {
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (const auto& [id, title] : criteria()) out.push_back(run_criterion(id, seed));
    return out;
  }
  std::vector<std::future<CriterionResult>> jobs;
  for (const auto& [id, title] : criteria()) {
    jobs.push_back(std::async(std::launch::async, [id = id, seed] { return run_criterion(id, seed); }));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace bilattice::checks
