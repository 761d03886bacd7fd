#pragma once

// Seeded random generators for property suites. Measures are drawn from a
// small rational grid and rejection-sampled on nonnegativity, so the
// distribution is not uniform over the cone of q-measures.

#include <cstdint>
#include <random>
#include <vector>

#include "qm/coevent.hpp"
#include "qm/qmeasure.hpp"
#include "qm/transfer.hpp"

namespace qm {

class MeasureSampler {
 public:
  explicit MeasureSampler(std::uint64_t seed) : rng_(seed) {}

  // Singles k/q with k in 0..4, interference terms k/q with k in -4..4, and
  // q drawn from {1,2,3,4,6}; redrawn until every event value is >= 0.
  SignedQMeasure q_measure(const OutcomeSpace& space);
  // An ordinary measure: singles k/q, zero interference.
  SignedQMeasure additive_measure(const OutcomeSpace& space);
  // q_measure scaled so its largest value is exactly 1 (zero stays zero).
  SignedQMeasure unit_bounded(const OutcomeSpace& space);
  // A bounded measure that is not pure.
  SignedQMeasure non_pure_unit_bounded(const OutcomeSpace& space);
  // Random nonnegative weights k/q, k in 0..4, on a random subset of the logic.
  TransferMeasure weights_on(const std::vector<Coevent>& logic);
  // Values drawn uniformly from the given list.
  OutcomeFunction function(const OutcomeSpace& space, const std::vector<Rational>& values);
  // Integers in [lo, hi] over the denominator q.
  Rational grid(int lo, int hi, int q);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  int denominator();
  std::mt19937_64 rng_;
};

}  // namespace qm
