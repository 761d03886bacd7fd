#include "qm/transfer.hpp"

#include <algorithm>
#include <string>

#include "qm/errors.hpp"
#include "qm/ratlp.hpp"

namespace qm {
namespace {

void check_space(const Coevent& phi, const OutcomeSpace& space) {
  if (!(phi.space() == space)) throw InputError("coevent lives on a different outcome space");
}

}  // namespace

std::vector<Coevent> LogicSelection::materialize(const OutcomeSpace& space) const {
  std::vector<Coevent> out;
  switch (kind) {
    case LogicSelectionKind::full: out = enumerate_logic(space, LogicKind::full); break;
    case LogicSelectionKind::additive: out = enumerate_logic(space, LogicKind::additive); break;
    case LogicSelectionKind::multiplicative: out = enumerate_logic(space, LogicKind::multiplicative); break;
    case LogicSelectionKind::quadratic: out = enumerate_logic(space, LogicKind::quadratic); break;
    case LogicSelectionKind::pure:
      for (auto& p : enumerate_pure(space)) out.push_back(std::move(p.coevent));
      break;
    case LogicSelectionKind::explicit_list:
      for (const auto& phi : members) check_space(phi, space);
      out = members;
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LogicSelectionKind parse_logic_selection_kind(std::string_view text) {
  if (text == "pure") return LogicSelectionKind::pure;
  switch (parse_logic_kind(text)) {
    case LogicKind::full: return LogicSelectionKind::full;
    case LogicKind::additive: return LogicSelectionKind::additive;
    case LogicKind::multiplicative: return LogicSelectionKind::multiplicative;
    case LogicKind::quadratic: return LogicSelectionKind::quadratic;
  }
  throw DefectError("unhandled logic kind");
}

TransferMeasure::TransferMeasure(std::vector<TransferTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const TransferTerm& a, const TransferTerm& b) { return a.coevent < b.coevent; });
  for (auto& t : terms) {
    if (sgn(t.weight) < 0) throw InputError("transfer weights must be nonnegative");
    if (!terms_.empty() && terms_.back().coevent == t.coevent) {
      terms_.back().weight += t.weight;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const TransferTerm& t) { return sgn(t.weight) == 0; });
}

Rational TransferMeasure::weight(const Coevent& phi) const {
  for (const auto& t : terms_) {
    if (t.coevent == phi) return t.weight;
  }
  return 0;
}

Rational TransferMeasure::mass_on(Event a) const {
  Rational s;
  for (const auto& t : terms_) {
    if (t.coevent(a)) s += t.weight;
  }
  return s;
}

bool TransferMeasure::satisfies_contract(const SignedQMeasure& m) const {
  for (const auto& t : terms_) {
    if (!(t.coevent.space() == m.space())) return false;
  }
  for (Mask a = 1; a <= m.space().full_mask(); ++a) {
    if (mass_on(Event{a}) != m.evaluate(Event{a})) return false;
  }
  return true;
}

TransferMeasure transfer_constructive(const SignedQMeasure& m, const std::vector<Coevent>& logic) {
  const auto parts = decompose(m);
  std::vector<TransferTerm> terms;
  for (const auto& t : parts.terms) {
    if (std::find(logic.begin(), logic.end(), t.component.coevent) == logic.end()) {
      std::string monomials;
      for (const auto s : t.component.coevent.polynomial().monomials) monomials += "[" + format_event(s) + "]";
      throw InputError("logic lacks the pure coevent " + monomials + " needed by the decomposition");
    }
    terms.push_back({t.component.coevent, t.weight});
  }
  TransferMeasure nu(std::move(terms));
  if (!nu.satisfies_contract(m)) throw DefectError("constructive transfer violates the transfer contract");
  return nu;
}

TransferResult transfer_feasible(const SignedQMeasure& m, const std::vector<Coevent>& logic) {
  const auto& space = m.space();
  if (space.size() > 10) throw ResourceError("transfer is capped at n=10");
  std::vector<const Coevent*> vars;
  for (const auto& phi : logic) {
    check_space(phi, space);
    if (phi.is_zero()) continue;
    if (std::none_of(vars.begin(), vars.end(), [&](const Coevent* p) { return *p == phi; })) vars.push_back(&phi);
  }
  if (vars.size() > kMaxLpCols) throw ResourceError("logic has more than 65536 nonzero coevents");
  const std::size_t rows = space.full_mask();
  TransferResult out;
  std::vector<Rational> b(rows);
  for (std::size_t r = 0; r < rows; ++r) b[r] = m.evaluate(Event{static_cast<Mask>(r + 1)});

  std::vector<Rational> y;
  if (vars.empty()) {
    const auto hit = std::find_if(b.begin(), b.end(), [](const Rational& v) { return sgn(v) != 0; });
    if (hit == b.end()) {
      out.feasible = true;
      return out;
    }
    y.assign(rows, Rational(0));
    y[static_cast<std::size_t>(hit - b.begin())] = sgn(*hit);
  } else {
    RationalMatrix a(rows, vars.size());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t k = 0; k < vars.size(); ++k) a(r, k) = (*vars[k])(Event{static_cast<Mask>(r + 1)}) ? 1 : 0;
    }
    const auto result = solve_feasibility(a, b);
    if (result.feasible()) {
      std::vector<TransferTerm> terms;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (sgn(result.solution[k]) > 0) terms.push_back({*vars[k], result.solution[k]});
      }
      out.feasible = true;
      out.nu = TransferMeasure(std::move(terms));
      if (!out.nu.satisfies_contract(m)) throw DefectError("transfer solution violates the transfer contract");
      return out;
    }
    y = result.certificate;
  }
  for (std::size_t r = 0; r < rows; ++r) out.certificate.emplace(Event{static_cast<Mask>(r + 1)}, y[r]);
  if (!certificate_valid(out.certificate, m, logic)) throw DefectError("infeasibility certificate fails substitution");
  return out;
}

bool certificate_valid(const std::map<Event, Rational>& y, const SignedQMeasure& m, const std::vector<Coevent>& logic) {
  Rational rhs;
  for (const auto& [a, v] : y) {
    if (a.empty() || !m.space().contains(a)) return false;
    rhs += v * m.evaluate(a);
  }
  if (sgn(rhs) <= 0) return false;
  for (const auto& phi : logic) {
    if (phi.is_zero()) continue;
    Rational lhs;
    for (const auto& [a, v] : y) {
      if (phi(a)) lhs += v;
    }
    if (sgn(lhs) > 0) return false;
  }
  return true;
}

TransferMeasure AdditiveInterval::measure(const OutcomeSpace& space) const {
  if (!feasible) return {};
  return TransferMeasure({{evaluation_map(space, 0), nu1},
                          {evaluation_map(space, 1), nu2},
                          {evaluation_map(space, 0) ^ evaluation_map(space, 1), nu12}});
}

AdditiveInterval additive_logic_interval(const SignedQMeasure& m) {
  if (m.space().size() != 2) throw InputError("the additive interval test needs exactly two outcomes");
  const Rational& mu1 = m.single(0);
  const Rational& mu2 = m.single(1);
  const Rational& whole = m.pair_value(0, 1);
  AdditiveInterval out;
  out.feasible = abs(mu1 - mu2) <= whole && whole <= mu1 + mu2;
  if (out.feasible) {
    out.nu1 = (whole + mu1 - mu2) / 2;
    out.nu2 = (whole - mu1 + mu2) / 2;
    out.nu12 = (mu1 + mu2 - whole) / 2;
  }
  return out;
}

bool quadratic_support_check(const TransferMeasure& nu) {
  bool ok = true;
  for (const auto& t : nu.terms()) {
    if (t.coevent.monomial_count() > 1) throw InputError("support contains a coevent that is not a single monomial");
    ok = ok && t.coevent.degree() <= 2;
  }
  return ok;
}

SignedQMeasure induced_measure(const TransferMeasure& nu, const OutcomeSpace& space) {
  for (const auto& t : nu.terms()) check_space(t.coevent, space);
  std::map<Event, Rational> table;
  for (Mask a = 1; a <= space.full_mask(); ++a) table.emplace(Event{a}, nu.mass_on(Event{a}));
  return from_full_table(space, table);
}

}  // namespace qm
