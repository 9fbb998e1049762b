#include "bilattice/recurrence.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

RecurrenceTable::RecurrenceTable(std::vector<ExactScalar> B, std::vector<ExactScalar> C, ExactScalar m0)
    : B_(std::move(B)), C_(std::move(C)), m0_(std::move(m0)) {
  if (B_.size() != C_.size() + 1 && !(B_.empty() && C_.empty())) {
    throw MathError("recurrence table needs one more B than C (got " + std::to_string(B_.size()) + " and " +
                    std::to_string(C_.size()) + ")");
  }
  if (m0_.is_zero()) throw RegularityError("m0 must be nonzero", 0);
  h_.reserve(B_.size());
  if (!B_.empty()) h_.push_back(m0_);
  for (std::size_t n = 0; n < C_.size(); ++n) {
    if (C_[n].is_zero()) throw RegularityError("C vanishes", static_cast<long>(n + 1));
    h_.push_back(h_.back() * C_[n]);
  }
}

const ExactScalar& RecurrenceTable::C_at(int n) const {
  if (n < 1 || n > static_cast<int>(C_.size())) throw TruncationError("C index outside table", n);
  return C_[static_cast<std::size_t>(n - 1)];
}

RecurrenceTable RecurrenceTable::truncated(int n) const {
  if (n > checked_to()) throw TruncationError("truncation beyond table", n);
  if (n < 0) return {};
  return {std::vector<ExactScalar>(B_.begin(), B_.begin() + n + 1),
          std::vector<ExactScalar>(C_.begin(), C_.begin() + n), m0_};
}

std::vector<Poly> generate_ops(const RecurrenceTable& table) {
  std::vector<Poly> out;
  const int N = table.checked_to();
  if (N < 0) return out;
  out.push_back(Poly::constant(ExactScalar(1)));
  for (int n = 0; n < N; ++n) {
    Poly next = Poly({-table.B()[n], ExactScalar(1)}) * out[n];
    if (n > 0) next -= table.C_at(n) * out[n - 1];
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace bilattice
