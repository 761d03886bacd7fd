#include "qm/classical.hpp"

#include <algorithm>
#include <set>

#include "qm/errors.hpp"

namespace qm {

Subalgebra::Subalgebra(OutcomeSpace space, std::vector<Event> atoms) : space_(space), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  for (const Event a : atoms_) top_ = top_ | a;
}

Subalgebra Subalgebra::from_atoms(OutcomeSpace space, std::vector<Event> atoms) {
  Mask seen = 0;
  for (const Event a : atoms) {
    if (a.empty()) throw InputError("an atom cannot be empty");
    if (!space.contains(a)) throw InputError("atom {" + format_event(a) + "} outside the outcome space");
    if ((a.bits & seen) != 0) throw InputError("atoms must be pairwise disjoint");
    seen |= a.bits;
  }
  return Subalgebra(space, std::move(atoms));
}

Subalgebra Subalgebra::from_members(OutcomeSpace space, const std::vector<Event>& members) {
  for (const Event e : members) {
    if (!space.contains(e)) throw InputError("event {" + format_event(e) + "} outside the outcome space");
  }
  const auto check = is_subalgebra(members);
  if (!check.ok) {
    std::string msg = "not a subalgebra: " + check.reason;
    if (check.witness) {
      msg += " of {" + format_event(check.witness->first) + "} and {" + format_event(check.witness->second) + "}";
    }
    throw InputError(msg);
  }
  // Atoms are the nonempty members with no nonempty proper sub-member.
  std::vector<Event> atoms;
  for (const Event e : members) {
    if (e.empty()) continue;
    const bool minimal = std::none_of(members.begin(), members.end(), [&](Event f) {
      return !f.empty() && f != e && f.is_subset_of(e);
    });
    if (minimal && std::find(atoms.begin(), atoms.end(), e) == atoms.end()) atoms.push_back(e);
  }
  return Subalgebra(space, std::move(atoms));
}

Subalgebra Subalgebra::power_set(OutcomeSpace space) {
  std::vector<Event> atoms;
  for (int i = 0; i < space.size(); ++i) atoms.push_back(Event::singleton(i));
  return Subalgebra(space, std::move(atoms));
}

std::vector<Event> Subalgebra::members() const {
  if (atoms_.size() > 20) throw ResourceError("member listing capped at 20 atoms");
  std::vector<Event> out;
  out.reserve(member_count());
  for (std::uint64_t t = 0; t < member_count(); ++t) {
    Event e;
    for (std::uint64_t r = t; r != 0; r &= r - 1) e = e | atoms_[static_cast<std::size_t>(std::countr_zero(r))];
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subalgebra::contains(Event e) const {
  if (!e.is_subset_of(top_)) return false;
  return std::all_of(atoms_.begin(), atoms_.end(), [&](Event a) { return a.is_subset_of(e) || a.disjoint_from(e); });
}

bool Subalgebra::is_subset_of(const Subalgebra& other) const {
  return std::all_of(atoms_.begin(), atoms_.end(), [&](Event a) { return other.contains(a); });
}

SubalgebraCheck is_subalgebra(const std::vector<Event>& members) {
  std::vector<Event> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SubalgebraCheck out;
  if (sorted.empty() || !sorted.front().empty()) {
    out.ok = false;
    out.reason = "the empty event is missing";
    return out;
  }
  const std::set<Event> lookup(sorted.begin(), sorted.end());
  for (const Event a : sorted) {
    for (const Event b : sorted) {
      const char* missing = nullptr;
      if (!lookup.contains(a | b)) {
        missing = "missing union";
      } else if (!lookup.contains(a & b)) {
        missing = "missing intersection";
      } else if (!lookup.contains(a - b)) {
        missing = "missing difference";
      }
      if (missing != nullptr) {
        out.ok = false;
        out.reason = missing;
        out.witness = std::pair{a, b};
        return out;
      }
    }
  }
  return out;
}

Subalgebra phi_center(const Coevent& phi, Exec exec) {
  const auto& space = phi.space();
  if (space.size() > 12) throw ResourceError("center computation capped at n=12");
  const Mask full = space.full_mask();
  const auto in_center = filter_indices(
      space.event_count(),
      [&](std::uint64_t m) {
        const auto a = static_cast<Mask>(m);
        for (Mask b = 1; b <= full; ++b) {
          if (phi(Event{b}) != (phi(Event{b & a}) != phi(Event{b & ~a}))) return false;
        }
        return true;
      },
      exec);
  std::vector<Event> members;
  members.reserve(in_center.size());
  for (const auto m : in_center) members.emplace_back(static_cast<Mask>(m));
  const auto check = is_subalgebra(members);
  if (!check.ok) throw DefectError("center is not closed: " + check.reason);
  return Subalgebra::from_members(space, members);
}

ClassicalityReport is_classical_subdomain(const Coevent& phi, const Subalgebra& s) {
  if (!(phi.space() == s.space())) throw InputError("coevent and subalgebra live on different outcome spaces");
  ClassicalityReport report{s, false, std::nullopt};
  if (!phi(s.top())) {
    report.failure = ClassicalityFailure{Condition::unital, s.top(), s.top()};
    return report;
  }
  const auto members = s.members();
  for (const Event a : members) {
    for (const Event b : members) {
      if (a.disjoint_from(b) && phi(a | b) != (phi(a) != phi(b))) {
        report.failure = ClassicalityFailure{Condition::additive, a, b};
        return report;
      }
    }
  }
  for (const Event a : members) {
    for (const Event b : members) {
      if (phi(a & b) != (phi(a) && phi(b))) {
        report.failure = ClassicalityFailure{Condition::multiplicative, a, b};
        return report;
      }
    }
  }
  report.is_subdomain = true;
  return report;
}

std::vector<Subalgebra> center_subdomains(const Coevent& phi, Exec exec) {
  if (phi.is_zero()) throw InputError("the zero coevent has no classical subdomain");
  const auto center = phi_center(phi, exec);
  std::vector<Event> on;
  std::vector<Event> off;
  for (const Event a : center.atoms()) (phi(a) ? on : off).push_back(a);
  std::vector<Subalgebra> out;
  for (const Event a : on) {
    std::vector<Event> atoms = off;
    atoms.push_back(a);
    auto s = Subalgebra::from_atoms(phi.space(), std::move(atoms));
    if (!is_classical_subdomain(phi, s).is_subdomain) {
      throw DefectError("generated center subalgebra is not a classical subdomain");
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Calls fn with every set partition of the given outcomes, as lists of blocks,
// in restricted growth string order.
template <class Fn>
void for_each_partition(const std::vector<int>& outcomes, Fn&& fn) {
  const std::size_t k = outcomes.size();
  if (k == 0) {
    fn(std::vector<Event>{});
    return;
  }
  std::vector<int> rgs(k, 0);
  std::vector<int> maxima(k, 0);  // maxima[i] = max(rgs[0..i-1])
  while (true) {
    int blocks = 0;
    for (const int v : rgs) blocks = std::max(blocks, v + 1);
    std::vector<Event> parts(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < k; ++i) {
      parts[static_cast<std::size_t>(rgs[i])] = parts[static_cast<std::size_t>(rgs[i])] | Event::singleton(outcomes[i]);
    }
    fn(parts);
    // Advance to the next restricted growth string.
    std::size_t i = k;
    while (i-- > 1) {
      if (rgs[i] <= maxima[i]) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < k; ++j) {
          rgs[j] = 0;
          maxima[j] = std::max(maxima[j - 1], rgs[j - 1]);
        }
        break;
      }
    }
    if (i == 0) return;
  }
}

}  // namespace

std::vector<Subalgebra> enumerate_subalgebras(const OutcomeSpace& space) {
  if (space.size() > 6) throw ResourceError("subalgebra enumeration capped at n=6");
  std::vector<Subalgebra> out;
  for (Mask top = 0; top <= space.full_mask(); ++top) {
    for_each_partition(Event{top}.outcomes(), [&](const std::vector<Event>& parts) {
      out.push_back(Subalgebra::from_atoms(space, parts));
    });
  }
  return out;
}

std::vector<Subalgebra> classical_domains(const Coevent& phi, Exec exec) {
  const auto all = enumerate_subalgebras(phi.space());
  const auto hits = filter_indices(
      all.size(), [&](std::uint64_t i) { return is_classical_subdomain(phi, all[i]).is_subdomain; }, exec);
  std::vector<Subalgebra> out;
  for (const auto i : hits) {
    const auto& s = all[i];
    const bool maximal = std::none_of(hits.begin(), hits.end(), [&](std::uint64_t j) {
      return j != i && s.is_subset_of(all[j]) && !(all[j] == s);
    });
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Subalgebra& a, const Subalgebra& b) { return a.members() < b.members(); });
  return out;
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::unital: return "unital";
    case Condition::additive: return "additive";
    case Condition::multiplicative: return "multiplicative";
  }
  return "?";
}

}  // namespace qm
