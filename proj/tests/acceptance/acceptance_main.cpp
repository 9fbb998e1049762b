// Runs the ten acceptance criteria and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bilattice/checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (const char* env = std::getenv("BILATTICE_SEED")) seed = std::stoull(env);
  if (argc > 1) seed = std::stoull(argv[1]);

  const auto start = std::chrono::steady_clock::now();
  const auto results = bilattice::checks::run_all(seed);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::printf("%s criterion %2d (%s) [%.2fs]: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
  }
  const bool in_budget = total < 60.0;
  std::printf("%s total wall time %.2fs (budget 60s), seed %llu\n", in_budget ? "PASS" : "FAIL", total,
              static_cast<unsigned long long>(seed));
  return failed == 0 && in_budget ? 0 : 1;
}
