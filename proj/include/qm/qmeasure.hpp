#pragma once

// Signed q-measures on the power set of a finite outcome space.
//
// A grade-2 additive set function is fixed by its values on singletons and
// doubletons, so those n(n+1)/2 numbers are the stored coordinates; every
// other event value is derived from them.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qm/errors.hpp"
#include "qm/parallel.hpp"
#include "qm/rational.hpp"
#include "qm/space.hpp"

namespace qm {

// Number of unordered pairs i < j among n outcomes.
constexpr std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }
// Dimension of the space of signed q-measures: n singletons + n(n-1)/2 pairs.
constexpr std::size_t coordinate_count(int n) { return static_cast<std::size_t>(n) + pair_count(n); }
// Position of the pair (i, j), i < j, 0-based, in row-major upper-triangular order.
constexpr std::size_t pair_index(int n, int i, int j) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * n - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

class SignedQMeasure {
 public:
  // singles[i] = mu({w_i}); doubles[pair_index(n,i,j)] = mu({w_i, w_j}).
  SignedQMeasure(OutcomeSpace space, std::vector<Rational> singles, std::vector<Rational> doubles);

  static SignedQMeasure zero(OutcomeSpace space);
  // Singles followed by doubles, the order coordinates() returns.
  static SignedQMeasure from_coordinates(OutcomeSpace space, std::span<const Rational> coords);

  const OutcomeSpace& space() const noexcept { return space_; }
  const Rational& single(int i) const { return singles_[static_cast<std::size_t>(i)]; }
  const Rational& pair_value(int i, int j) const;
  const std::vector<Rational>& singles() const noexcept { return singles_; }
  const std::vector<Rational>& doubles() const noexcept { return doubles_; }
  std::vector<Rational> coordinates() const;

  // mu(A) = sum_{i<j in A} mu({w_i,w_j}) - (|A|-2) sum_{i in A} mu({w_i}),
  // with mu(empty) = 0 and the singleton values returned directly.
  Rational evaluate(Event a) const;

  // I_ij = mu({w_i,w_j}) - mu({w_i}) - mu({w_j}). Throws InputError for i == j.
  Rational interference(int i, int j) const;

  // Every event value, indexed by mask. Requires n <= 20.
  std::vector<Rational> full_table() const;

  // True when every interference term vanishes (an ordinary signed measure).
  bool is_additive() const;

  friend SignedQMeasure operator+(const SignedQMeasure& a, const SignedQMeasure& b);
  friend SignedQMeasure operator-(const SignedQMeasure& a, const SignedQMeasure& b);
  friend SignedQMeasure operator*(const Rational& s, const SignedQMeasure& m);
  friend bool operator==(const SignedQMeasure&, const SignedQMeasure&) = default;

 private:
  OutcomeSpace space_;
  std::vector<Rational> singles_;
  std::vector<Rational> doubles_;
};

// A table entry set violating grade-2 additivity on the disjoint triple (a, b, c).
class Grade2Violation : public InputError {
 public:
  Grade2Violation(Event a, Event b, Event c);
  Event a, b, c;
};

// Builds a measure from a value for every nonempty event (the empty event may
// be present and must be 0). Verifies grade-2 additivity on every disjoint
// triple of nonempty events and reports the first violating triple in
// ascending (a < b < c) mask order. Requires n <= 16.
SignedQMeasure from_full_table(const OutcomeSpace& space, const std::map<Event, Rational>& table);

// delta_i(A) = [w_i in A].
SignedQMeasure dirac(const OutcomeSpace& space, int i);
// The doubleton delta: 1 exactly on events containing both w_i and w_j.
SignedQMeasure doubleton_delta(const OutcomeSpace& space, int i, int j);

// mu = sum_i c_i delta_i + sum_{i<j} d_ij doubleton_delta_ij.
struct BasisCoefficients {
  std::vector<Rational> dirac;      // c_i = mu({w_i})
  std::vector<Rational> doubleton;  // d_ij = I_ij, pair_index order
};

BasisCoefficients basis_decomposition(const SignedQMeasure& m);
SignedQMeasure recompose(const OutcomeSpace& space, const BasisCoefficients& coefficients);

// lambda(A x B) = sum of alpha(i, j) over w_i in A, w_j in B.
class SymmetricSignedMeasure {
 public:
  // alpha is n*n row-major; throws InputError if it is not symmetric.
  SymmetricSignedMeasure(OutcomeSpace space, std::vector<Rational> alpha);

  const OutcomeSpace& space() const noexcept { return space_; }
  const Rational& alpha(int i, int j) const {
    return alpha_[static_cast<std::size_t>(i) * static_cast<std::size_t>(space_.size()) + static_cast<std::size_t>(j)];
  }
  Rational evaluate(Event a, Event b) const;

  friend bool operator==(const SymmetricSignedMeasure&, const SymmetricSignedMeasure&) = default;

 private:
  OutcomeSpace space_;
  std::vector<Rational> alpha_;
};

// alpha(i,i) = mu({w_i}), alpha(i,j) = I_ij / 2.
SymmetricSignedMeasure to_lambda(const SignedQMeasure& m);

// Rank of the linear map from symmetric kernels beta to the event values
// sum_{i,j in A} beta(i,j). Full rank n(n+1)/2 means the kernel reproducing
// a given measure on the diagonal is unique. Requires n <= 10.
std::size_t lambda_system_rank(const OutcomeSpace& space);

struct ComplexRational {
  Rational re;
  Rational im;
};

// mu(A) = |nu(A)|^2 for the complex measure nu with nu({w_i}) = amplitude[i].
SignedQMeasure from_amplitude(const OutcomeSpace& space, std::span<const ComplexRational> amplitude);

struct QMeasureFlag {
  bool is_q_measure = true;
  std::optional<Event> witness;  // smallest-mask event with a negative value
  Rational witness_value;
};

// Exhaustive nonnegativity scan over all 2^n events. The witness is the
// smallest negative event regardless of exec.
QMeasureFlag is_q_measure(const SignedQMeasure& m, Exec exec = Exec::parallel);

// Largest event value (the scale that maps a q-measure into the unit-bounded set).
Rational max_value(const SignedQMeasure& m);

}  // namespace qm
