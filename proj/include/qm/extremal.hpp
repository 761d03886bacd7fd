#pragma once

// Pure q-measures (all event values 0 or 1), the extreme points of the set of
// q-measures bounded by 1, and convex decomposition into pure measures.

#include <optional>
#include <vector>

#include "qm/coevent.hpp"
#include "qm/qmeasure.hpp"
#include "qm/ratlp.hpp"

namespace qm {

struct PureQMeasure {
  SignedQMeasure measure;
  Coevent coevent;  // same 0/1 values
};

struct PurityCheck {
  bool pure = true;
  std::optional<Event> witness;  // smallest event whose value is not 0 or 1
  Rational witness_value;
};

PurityCheck check_pure(const SignedQMeasure& m, Exec exec = Exec::parallel);
bool is_pure(const SignedQMeasure& m, Exec exec = Exec::parallel);

// The grade-2 extension of a coevent's singleton and doubleton values, read
// as rationals. Agrees with phi on every event exactly when phi is pure.
SignedQMeasure grade2_extension(const Coevent& phi);

// All pure q-measures, sorted by coordinate tuple. Requires n <= 6.
std::vector<PureQMeasure> enumerate_pure(const OutcomeSpace& space, Exec exec = Exec::parallel);

// Row A holds the coefficients of m -> m(A) in the singles-then-doubles
// coordinates: 2 - |A| on each singleton in A, 1 on each pair inside A.
std::vector<Rational> event_functional(const OutcomeSpace& space, Event a);

// Throws InputError unless m is a q-measure with every value at most 1.
void require_unit_bounded(const SignedQMeasure& m);

// Rank test: extremal iff the events with value 0 or 1 pin down every coordinate.
bool is_extremal(const SignedQMeasure& m);

// For a non-extremal m, a direction eta vanishing on every binding event and
// a step eps > 0 with m +- eps*eta both still bounded q-measures.
struct Perturbation {
  SignedQMeasure eta;
  Rational epsilon;
};
std::optional<Perturbation> extremality_perturbation(const SignedQMeasure& m);

// Vertices of { x : 0 <= m_x(A) <= 1 for every event A } by enumerating
// square nonsingular active sets with 0/1 right-hand sides, sorted by
// coordinate tuple. For n <= 3 these are exactly the pure measures. At n = 4
// there are 614 vertices and only 111 of them are pure, so callers must not
// assume purity. n <= 3, or n = 4 when allow_n4 is set.
std::vector<SignedQMeasure> vertices_of_M(const OutcomeSpace& space, bool allow_n4 = false,
                                          Exec exec = Exec::parallel);

struct DecompositionTerm {
  Rational weight;  // > 0
  PureQMeasure component;
};

struct Decomposition {
  OutcomeSpace space;
  Rational scale;  // largest event value of the input
  std::vector<DecompositionTerm> terms;
  // Weights sum to scale, i.e. m/scale is a convex combination of the
  // components. False when only a nonnegative combination exists.
  bool convex = true;

  SignedQMeasure recompose() const;
};

// Thrown when no nonnegative combination of pure measures reproduces m.
// Carries the Farkas certificate over the coordinate rows.
class NotDecomposable : public InputError {
 public:
  NotDecomposable(std::string what, std::vector<Rational> certificate);
  std::vector<Rational> certificate;
};

// m = sum of weight * component. Additive measures decompose onto Dirac
// measures and pure input is returned as a single term. Otherwise an exact
// convex-combination solve over the pure measures is tried first; when m/scale
// lies outside their convex hull (possible from n = 4 on) the sum-to-one row
// is dropped and a nonnegative combination is returned with convex = false.
// If that fails too (also possible from n = 4 on) NotDecomposable is thrown.
// Requires n <= 5.
Decomposition decompose(const SignedQMeasure& m);

}  // namespace qm
