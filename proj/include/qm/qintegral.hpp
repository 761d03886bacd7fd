#pragma once

// The q-integral of a function on a finite outcome space.

#include <vector>

#include "qm/qmeasure.hpp"
#include "qm/space.hpp"

namespace qm {

// f = sum_i levels[i] * chi(cells[i]), levels strictly increasing, cells a
// partition of the space. A zero level is kept when f takes the value 0.
struct CanonicalSimpleForm {
  std::vector<Rational> levels;
  std::vector<Event> cells;
};

// Throws InputError if f takes a negative value.
CanonicalSimpleForm canonical_form(const OutcomeFunction& f);

// Layer-cake sum over the canonical form:
// sum_i levels[i] * (mu(A_i u ... u A_k) - mu(A_{i+1} u ... u A_k)).
Rational q_integral(const OutcomeFunction& f, const SignedQMeasure& m);

// sum_i mu({w_i}) f(w_i) + sum_{i<j} I_ij min(f(w_i), f(w_j)).
Rational q_integral_min_form(const OutcomeFunction& f, const SignedQMeasure& m);

// q_integral(f+) - q_integral(f-) with f+ = max(f, 0), f- = max(-f, 0).
Rational q_integral_signed(const OutcomeFunction& f, const SignedQMeasure& m);

// q_integral_signed(f * chi(a)).
Rational q_integral_over_event(const OutcomeFunction& f, const SignedQMeasure& m, Event a);

}  // namespace qm
