#pragma once

// Transferring a q-measure on events to an ordinary measure on a collection
// of coevents: nu({phi : phi(A) = 1}) = mu(A) for every nonempty event A.

#include <map>
#include <optional>
#include <vector>

#include "qm/coevent.hpp"
#include "qm/extremal.hpp"
#include "qm/qmeasure.hpp"

namespace qm {

enum class LogicSelectionKind { full, additive, multiplicative, quadratic, pure, explicit_list };

struct LogicSelection {
  LogicSelectionKind kind = LogicSelectionKind::pure;
  std::vector<Coevent> members;  // used by explicit_list

  static LogicSelection named(LogicSelectionKind kind) { return {kind, {}}; }
  static LogicSelection explicit_members(std::vector<Coevent> members) {
    return {LogicSelectionKind::explicit_list, std::move(members)};
  }

  // The coevents of the selection, ascending and without repeats.
  std::vector<Coevent> materialize(const OutcomeSpace& space) const;
};

LogicSelectionKind parse_logic_selection_kind(std::string_view text);

struct TransferTerm {
  Coevent coevent;
  Rational weight;  // > 0
};

class TransferMeasure {
 public:
  TransferMeasure() = default;
  // Merges repeated coevents and drops zero weights. Throws InputError on a negative weight.
  explicit TransferMeasure(std::vector<TransferTerm> terms);

  const std::vector<TransferTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  Rational weight(const Coevent& phi) const;
  // nu({phi : phi(A) = 1})
  Rational mass_on(Event a) const;
  bool satisfies_contract(const SignedQMeasure& m) const;

 private:
  std::vector<TransferTerm> terms_;  // ascending by coevent
};

// Weight on the pure coevent of every decomposition term. Throws InputError
// when the logic lacks one of those coevents.
TransferMeasure transfer_constructive(const SignedQMeasure& m, const std::vector<Coevent>& logic);

struct TransferResult {
  bool feasible = false;
  TransferMeasure nu;
  std::map<Event, Rational> certificate;  // y over nonempty events when infeasible
};

// Exact feasibility over the nonzero members of the logic; the zero coevent
// is never weighted. Requires n <= 10.
TransferResult transfer_feasible(const SignedQMeasure& m, const std::vector<Coevent>& logic);

// True when the certificate proves infeasibility for this measure and logic.
bool certificate_valid(const std::map<Event, Rational>& y, const SignedQMeasure& m, const std::vector<Coevent>& logic);

// Two outcomes, additive logic {w1*, w2*, w1* + w2*}: feasible iff
// |mu1 - mu2| <= mu(Omega) <= mu1 + mu2, with a closed-form nu.
struct AdditiveInterval {
  bool feasible = false;
  Rational nu1;   // w1*
  Rational nu2;   // w2*
  Rational nu12;  // w1* + w2*

  TransferMeasure measure(const OutcomeSpace& space) const;
};
AdditiveInterval additive_logic_interval(const SignedQMeasure& m);

// Every positively weighted coevent must be a single monomial (or zero);
// returns whether all of them have degree at most 2.
bool quadratic_support_check(const TransferMeasure& nu);

// mu(A) = nu({phi : phi(A) = 1}); throws Grade2Violation when that set
// function is not grade-2 additive. Requires n <= 16.
SignedQMeasure induced_measure(const TransferMeasure& nu, const OutcomeSpace& space);

}  // namespace qm
