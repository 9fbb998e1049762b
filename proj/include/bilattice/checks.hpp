#pragma once

// Acceptance criteria as runnable checks, plus the fixture catalog they and
// the unit tests share. Every check is exact; randomized checks draw from a
// seeded mt19937_64 so a run is reproducible from its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "bilattice/classical.hpp"
#include "bilattice/families.hpp"
#include "bilattice/pearson.hpp"

namespace bilattice::checks {

struct Fixture {
  std::string name;
  std::string phi;
  std::string psi;
};

/// Regular pairs (H-type and Q-type).
const std::vector<Fixture>& regular_fixtures();

struct FailingFixture {
  Fixture pair;
  int failing_n;
  RegularityCondition condition;
};

/// Engineered regularity failures with their expected verdicts.
const std::vector<FailingFixture>& failing_fixtures();

/// "0", "1/3", "i/2".
const std::vector<std::string>& gamma_grid();

PearsonPair fixture_pair(const Fixture& f, const Lattice& lattice);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// (id, title) for ids 1..10.
const std::vector<std::pair<int, std::string>>& criteria();

CriterionResult run_criterion(int id, std::uint64_t seed);

/// All criteria, fanned out over threads; results in id order.
std::vector<CriterionResult> run_all(std::uint64_t seed, bool parallel = true);

}  // namespace bilattice::checks
