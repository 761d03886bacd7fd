#pragma once

// Subalgebras of the event algebra, the center of a coevent, and the
// subalgebras on which a coevent behaves like a classical truth assignment.

#include <optional>
#include <string>
#include <vector>

#include "qm/coevent.hpp"
#include "qm/parallel.hpp"

namespace qm {

// A subalgebra of the power set, held by its atoms. The atoms partition the
// largest element; the members are all unions of atoms (including the empty one).
class Subalgebra {
 public:
  // Throws InputError unless the atoms are nonempty, pairwise disjoint and inside the space.
  static Subalgebra from_atoms(OutcomeSpace space, std::vector<Event> atoms);
  // Throws InputError (with the offending pair) unless members form a subalgebra.
  static Subalgebra from_members(OutcomeSpace space, const std::vector<Event>& members);
  static Subalgebra power_set(OutcomeSpace space);

  const OutcomeSpace& space() const noexcept { return space_; }
  const std::vector<Event>& atoms() const noexcept { return atoms_; }
  Event top() const noexcept { return top_; }
  // Ascending by mask. Requires at most 20 atoms.
  std::vector<Event> members() const;
  std::size_t member_count() const { return std::size_t{1} << atoms_.size(); }
  bool contains(Event e) const;
  bool is_subset_of(const Subalgebra& other) const;

  friend bool operator==(const Subalgebra&, const Subalgebra&) = default;

 private:
  Subalgebra(OutcomeSpace space, std::vector<Event> atoms);
  OutcomeSpace space_;
  std::vector<Event> atoms_;  // ascending by mask
  Event top_;
};

struct SubalgebraCheck {
  bool ok = true;
  std::string reason;                         // empty when ok
  std::optional<std::pair<Event, Event>> witness;  // first offending pair
};

// Checks the empty event is present and closure under union, intersection and
// difference. Pairs are scanned in lexicographic order of the sorted members.
SubalgebraCheck is_subalgebra(const std::vector<Event>& members);

// {A : phi(B) = phi(B n A) + phi(B - A) mod 2 for every B}. Requires n <= 12.
Subalgebra phi_center(const Coevent& phi, Exec exec = Exec::parallel);

enum class Condition { unital, additive, multiplicative };

struct ClassicalityFailure {
  Condition condition;
  Event a;
  Event b;
};

struct ClassicalityReport {
  Subalgebra subalgebra;
  bool is_subdomain = false;
  std::optional<ClassicalityFailure> failure;
};

// phi(top) = 1, then additivity on disjoint member pairs, then
// multiplicativity on all member pairs; the first failure is reported.
ClassicalityReport is_classical_subdomain(const Coevent& phi, const Subalgebra& s);

// The subalgebras generated by one "on" atom of the center together with all
// "off" atoms. Throws InputError for the zero coevent.
std::vector<Subalgebra> center_subdomains(const Coevent& phi, Exec exec = Exec::parallel);

// Every subalgebra, ordered by top mask and then by the restricted growth
// string of the atom partition. Requires n <= 6.
std::vector<Subalgebra> enumerate_subalgebras(const OutcomeSpace& space);

// Inclusion-maximal classical subdomains, sorted by member list. Requires n <= 6.
std::vector<Subalgebra> classical_domains(const Coevent& phi, Exec exec = Exec::parallel);

const char* to_string(Condition c);

}  // namespace qm
