#include "doctest.h"
#include "qm/errors.hpp"
#include "qm/sampling.hpp"
#include "qm/transfer.hpp"
#include "test_helpers.hpp"

using namespace qm;
using namespace qm::testing;

namespace {

Coevent poly(int n, std::initializer_list<Mask> monomials) {
  PolynomialForm p;
  for (Mask m : monomials) p.monomials.emplace_back(m);
  return Coevent::from_polynomial(OutcomeSpace(n), p);
}

// Contract checked without TransferMeasure::mass_on.
bool contract_holds(const TransferMeasure& nu, const SignedQMeasure& m) {
  for (Mask a = 1; a < m.space().event_count(); ++a) {
    Rational mass;
    for (const auto& t : nu.terms()) {
      if (t.coevent(Event{a})) mass += t.weight;
    }
    if (mass != m.evaluate(Event{a})) return false;
  }
  return true;
}

bool farkas_holds(const std::map<Event, Rational>& y, const SignedQMeasure& m, const std::vector<Coevent>& logic) {
  Rational ym;
  for (const auto& [a, v] : y) ym += v * m.evaluate(a);
  if (sgn(ym) <= 0) return false;
  for (const auto& phi : logic) {
    if (phi.is_zero()) continue;
    Rational s;
    for (const auto& [a, v] : y) {
      if (phi(a)) s += v;
    }
    if (sgn(s) > 0) return false;
  }
  return true;
}

void check_result(const TransferResult& r, const SignedQMeasure& m, const std::vector<Coevent>& logic) {
  if (r.feasible) {
    CHECK(contract_holds(r.nu, m));
    CHECK(r.nu.satisfies_contract(m));
    for (const auto& t : r.nu.terms()) {
      CHECK(sgn(t.weight) > 0);
      CHECK_FALSE(t.coevent.is_zero());
      CHECK(std::find(logic.begin(), logic.end(), t.coevent) != logic.end());
    }
  } else {
    CHECK(farkas_holds(r.certificate, m, logic));
    CHECK(certificate_valid(r.certificate, m, logic));
  }
}

std::vector<Coevent> logic_of(const OutcomeSpace& s, LogicSelectionKind k) { return LogicSelection::named(k).materialize(s); }

}  // namespace

TEST_CASE("logic selections") {
  const OutcomeSpace s(3);
  CHECK(logic_of(s, LogicSelectionKind::pure).size() == 35);
  CHECK(logic_of(s, LogicSelectionKind::full).size() == 128);
  CHECK(logic_of(s, LogicSelectionKind::quadratic).size() == 64);
  CHECK(logic_of(s, LogicSelectionKind::additive).size() == 8);
  const auto w1 = evaluation_map(s, 0);
  const auto sel = LogicSelection::explicit_members({w1, w1, evaluation_map(s, 2)});
  CHECK(sel.materialize(s).size() == 2);
  CHECK(parse_logic_selection_kind("pure") == LogicSelectionKind::pure);
  CHECK_THROWS_AS(parse_logic_selection_kind("nope"), InputError);
}

TEST_CASE("transfer measures") {
  const OutcomeSpace s(2);
  const auto w1 = evaluation_map(s, 0);
  const TransferMeasure nu({{w1, 1}, {w1, frac(1, 2)}, {evaluation_map(s, 1), 0}});
  REQUIRE(nu.terms().size() == 1);
  CHECK(nu.weight(w1) == frac(3, 2));
  CHECK(nu.mass_on(Event{3}) == frac(3, 2));
  CHECK(nu.mass_on(Event{2}) == 0);
  CHECK_THROWS_AS(TransferMeasure({{w1, -1}}), InputError);
}

TEST_CASE("two-outcome examples") {
  const OutcomeSpace s(2);
  const auto m = measure(2, {1, 1}, {0});
  const auto logic = enumerate_logic(s, LogicKind::full);
  // Full logic in normal-form order; the explicit sub-logic is the
  // product w1*w2 and its sums with w1* and w2*.
  const std::vector<Coevent> three{logic[4], logic[5], logic[6]};
  auto r = transfer_feasible(m, three);
  REQUIRE(r.feasible);
  CHECK(r.nu.weight(logic[5]) == 1);
  CHECK(r.nu.weight(logic[6]) == 1);
  CHECK(r.nu.weight(logic[4]) == 0);
  check_result(r, m, three);

  // The sum w1* + w2* alone carries the same measure.
  const TransferMeasure single({{logic[3], 1}});
  CHECK(single.satisfies_contract(m));

  const auto mult = enumerate_logic(s, LogicKind::multiplicative);
  r = transfer_feasible(m, mult);
  CHECK_FALSE(r.feasible);
  check_result(r, m, mult);

  const auto q = SignedQMeasure(s, {frac(1, 4), frac(1, 4)}, rats({1}));
  r = transfer_feasible(q, mult);
  REQUIRE(r.feasible);
  CHECK(r.nu.weight(evaluation_map(s, 0)) == frac(1, 4));
  CHECK(r.nu.weight(evaluation_map(s, 1)) == frac(1, 4));
  CHECK(r.nu.weight(poly(2, {3})) == frac(1, 2));

  const auto c = transfer_constructive(m, logic_of(s, LogicSelectionKind::pure));
  CHECK(contract_holds(c, m));
  CHECK(transfer_constructive(SignedQMeasure::zero(s), logic).empty());
  CHECK(transfer_feasible(SignedQMeasure::zero(s), logic).nu.empty());
}

TEST_CASE("constructive transfer of an ordinary measure sits on evaluation maps") {
  const OutcomeSpace s(3);
  const auto m = SignedQMeasure(s, {frac(1, 2), frac(1, 3), frac(1, 6)}, {frac(5, 6), frac(2, 3), frac(1, 2)});
  REQUIRE(m.is_additive());
  const auto nu = transfer_constructive(m, logic_of(s, LogicSelectionKind::pure));
  REQUIRE(nu.terms().size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(nu.weight(evaluation_map(s, i)) == m.single(i));
  auto missing = logic_of(s, LogicSelectionKind::pure);
  std::erase(missing, evaluation_map(s, 0));
  CHECK_THROWS_AS(transfer_constructive(m, missing), InputError);
}

TEST_CASE("additive logic interval") {
  const OutcomeSpace s(2);
  auto a = additive_logic_interval(measure(2, {1, 1}, {0}));
  REQUIRE(a.feasible);
  CHECK(a.nu12 == 1);
  CHECK(a.nu1 == 0);
  CHECK(a.nu2 == 0);
  a = additive_logic_interval(measure(2, {1, 0}, {0}));
  CHECK_FALSE(a.feasible);
  a = additive_logic_interval(SignedQMeasure(s, {frac(1, 2), frac(1, 2)}, rats({1})));
  REQUIRE(a.feasible);
  CHECK(a.nu1 == frac(1, 2));
  CHECK(a.nu2 == frac(1, 2));
  CHECK(a.nu12 == 0);
  CHECK_THROWS_AS(additive_logic_interval(measure(3, {1, 1, 1}, {2, 2, 2})), InputError);

  MeasureSampler rs(101);
  const auto additive = enumerate_logic(s, LogicKind::additive);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = rs.q_measure(s);
    const auto iv = additive_logic_interval(m);
    const auto r = transfer_feasible(m, additive);
    CHECK(iv.feasible == r.feasible);
    check_result(r, m, additive);
    if (iv.feasible) CHECK(contract_holds(iv.measure(s), m));
  }
}

TEST_CASE("quadratic support") {
  CHECK(quadratic_support_check(TransferMeasure{}));
  CHECK_FALSE(quadratic_support_check(TransferMeasure({{poly(3, {7}), 1}})));
  CHECK(quadratic_support_check(TransferMeasure({{poly(3, {3}), 1}, {poly(3, {4}), 2}})));
  CHECK_THROWS_AS(quadratic_support_check(TransferMeasure({{poly(3, {1, 2}), 1}})), InputError);
}

TEST_CASE("q-measures transfer to logics containing the pure coevents, to n = 3") {
  MeasureSampler rs(103);
  for (int n = 2; n <= 3; ++n) {
    const OutcomeSpace s(n);
    const std::vector<std::vector<Coevent>> logics{logic_of(s, LogicSelectionKind::pure),
                                                   logic_of(s, LogicSelectionKind::quadratic),
                                                   logic_of(s, LogicSelectionKind::full)};
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = rs.q_measure(s);
      for (const auto& logic : logics) {
        const auto r = transfer_feasible(m, logic);
        CHECK(r.feasible);
        check_result(r, m, logic);
      }
      CHECK(contract_holds(transfer_constructive(m, logics[0]), m));
    }
  }
}

TEST_CASE("four outcomes: pure-logic transfer agrees with decomposition") {
  MeasureSampler rs(103);
  const OutcomeSpace s(4);
  const auto pure = logic_of(s, LogicSelectionKind::pure);
  const auto full = logic_of(s, LogicSelectionKind::full);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = rs.q_measure(s);
    const auto r = transfer_feasible(m, pure);
    check_result(r, m, pure);
    bool decomposable = true;
    try {
      CHECK(contract_holds(transfer_constructive(m, pure), m));
    } catch (const NotDecomposable&) {
      decomposable = false;
    }
    CHECK(r.feasible == decomposable);
    if (trial % 10 == 0) {
      const auto f = transfer_feasible(m, full);
      CHECK(f.feasible);
      check_result(f, m, full);
    }
  }
}

TEST_CASE("four outcomes: a q-measure that transfers to neither the pure nor the quadratic logic") {
  const OutcomeSpace s(4);
  const auto m = measure(4, {0, 0, 0, 1}, {1, 1, 0, 1, 0, 0});
  REQUIRE(is_q_measure(m).is_q_measure);
  for (const auto kind : {LogicSelectionKind::pure, LogicSelectionKind::quadratic}) {
    const auto logic = logic_of(s, kind);
    const auto r = transfer_feasible(m, logic);
    CHECK_FALSE(r.feasible);
    check_result(r, m, logic);
  }
  CHECK_THROWS_AS(transfer_constructive(m, logic_of(s, LogicSelectionKind::pure)), InputError);
  // every event indicator is a coevent, so the full logic always works
  const auto full = logic_of(s, LogicSelectionKind::full);
  const auto r = transfer_feasible(m, full);
  CHECK(r.feasible);
  check_result(r, m, full);
}

TEST_CASE("measures induced from pure weights are recovered") {
  MeasureSampler rs(107);
  for (int n = 2; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const auto pure = logic_of(s, LogicSelectionKind::pure);
    for (int trial = 0; trial < 30; ++trial) {
      const auto nu = rs.weights_on(pure);
      const auto m = induced_measure(nu, s);
      CHECK(is_q_measure(m).is_q_measure);
      CHECK(contract_holds(nu, m));
      const auto r = transfer_feasible(m, pure);
      REQUIRE(r.feasible);
      CHECK(induced_measure(r.nu, s) == m);
    }
  }
}

TEST_CASE("ordinary measures and evaluation maps") {
  MeasureSampler rs(109);
  for (int n = 2; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const auto pure = logic_of(s, LogicSelectionKind::pure);
    const auto additive = enumerate_logic(s, LogicKind::additive);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = rs.additive_measure(s);
      const auto built = transfer_constructive(m, pure);
      for (const auto& t : built.terms()) CHECK(classify(t.coevent).additive);
      std::vector<TransferTerm> terms;
      for (int i = 0; i < n; ++i) terms.push_back({evaluation_map(s, i), rs.grid(0, 4, 3)});
      const TransferMeasure nu(terms);
      CHECK(induced_measure(nu, s).is_additive());
      CHECK(transfer_feasible(m, additive).feasible);
    }
  }
}

TEST_CASE("transfers onto multiplicative logics have quadratic support") {
  MeasureSampler rs(113);
  for (int n = 3; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const auto mult = enumerate_logic(s, LogicKind::multiplicative);
    int feasible = 0;
    int not_grade2 = 0;
    for (int trial = 0; trial < 80; ++trial) {
      // A random sub-collection of the multiplicative logic.
      std::vector<Coevent> sub;
      for (const auto& phi : mult) {
        if (rs.engine()() % 4 != 0) sub.push_back(phi);
      }
      if (sub.empty()) continue;
      const auto nu = rs.weights_on(sub);
      SignedQMeasure m = SignedQMeasure::zero(s);
      try {
        m = induced_measure(nu, s);
      } catch (const Grade2Violation&) {
        // Only weight on products of three or more evaluation maps breaks grade-2 additivity.
        CHECK_FALSE(quadratic_support_check(nu));
        ++not_grade2;
        continue;
      }
      const auto r = transfer_feasible(m, sub);
      REQUIRE(r.feasible);
      ++feasible;
      check_result(r, m, sub);
      CHECK(quadratic_support_check(r.nu));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) CHECK(m.pair_value(i, j) >= m.single(i) + m.single(j));
      }
      // Random q-measures: feasible only if the pairwise inequality holds.
      const auto q = rs.q_measure(s);
      const auto rq = transfer_feasible(q, sub);
      check_result(rq, q, sub);
      if (rq.feasible) {
        CHECK(quadratic_support_check(rq.nu));
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) CHECK(q.pair_value(i, j) >= q.single(i) + q.single(j));
        }
      }
    }
    CHECK(feasible > 0);
    CHECK(not_grade2 > 0);
  }
}

TEST_CASE("infeasibility certificates on random instances") {
  MeasureSampler rs(127);
  int infeasible = 0;
  for (int n = 2; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const std::vector<std::vector<Coevent>> logics{enumerate_logic(s, LogicKind::additive),
                                                   enumerate_logic(s, LogicKind::multiplicative)};
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = rs.q_measure(s);
      for (const auto& logic : logics) {
        const auto r = transfer_feasible(m, logic);
        check_result(r, m, logic);
        infeasible += !r.feasible;
        if (!r.feasible) {
          // Tampering with the certificate's sign breaks it.
          auto flipped = r.certificate;
          for (auto& [a, v] : flipped) v = -v;
          CHECK_FALSE(certificate_valid(flipped, m, logic));
        }
      }
    }
  }
  CHECK(infeasible > 0);
  CHECK_THROWS_AS(transfer_feasible(SignedQMeasure::zero(OutcomeSpace(11)), {}), ResourceError);
}
