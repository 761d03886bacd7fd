// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when
// every criterion matches its recorded expectation (see kExpectedFailures).

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qm/classical.hpp"
#include "qm/coevent.hpp"
#include "qm/extremal.hpp"
#include "qm/lebesgue2.hpp"
#include "qm/qintegral.hpp"
#include "qm/ratlp.hpp"
#include "qm/sampling.hpp"
#include "qm/transfer.hpp"

using namespace qm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Criteria 1 and 2 ask for 34 pure measures on three outcomes. The exhaustive
// count is 35: 34 nonzero pure coevents plus the zero measure, which is pure
// and a vertex of the bounded set. The two-outcome count of 8 in criterion 1
// includes the zero measure, so no single convention meets both numbers.
const std::set<int> kExpectedFailures{1, 2};

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Coevent poly(int n, std::initializer_list<Mask> monomials) {
  PolynomialForm p;
  for (Mask m : monomials) p.monomials.emplace_back(m);
  return Coevent::from_polynomial(OutcomeSpace(n), p);
}

std::vector<Event> events(std::initializer_list<Mask> ms) {
  std::vector<Event> out;
  for (Mask m : ms) out.emplace_back(m);
  return out;
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
}

// Shared seeded suite for criteria 4 and 5.
std::vector<SignedQMeasure> suite(int n) {
  MeasureSampler rs(1000 + static_cast<std::uint64_t>(n));
  std::vector<SignedQMeasure> out;
  for (int k = 0; k < 200; ++k) out.push_back(rs.q_measure(OutcomeSpace(n)));
  return out;
}

Outcome pure_counts() {
  Outcome o;
  const auto two = enumerate_pure(OutcomeSpace(2)).size();
  const auto three = enumerate_pure(OutcomeSpace(3));
  std::size_t nonzero = 0;
  for (const auto& p : three) nonzero += !p.coevent.is_zero();
  expect(o, two == 8, "n=2 gives " + std::to_string(two));
  expect(o, three.size() == 34,
         "n=3 gives " + std::to_string(three.size()) + " (" + std::to_string(nonzero) + " nonzero plus the zero measure)");
  return o;
}

Outcome vertices_three() {
  Outcome o;
  const OutcomeSpace s(3);
  const auto v = vertices_of_M(s);
  const auto p = enumerate_pure(s);
  std::set<std::vector<Rational>> vs, ps;
  for (const auto& x : v) vs.insert(x.coordinates());
  for (const auto& x : p) ps.insert(x.measure.coordinates());
  expect(o, vs == ps, "vertex set differs from the pure set");
  expect(o, vs.size() == 34, "vertex set equals the pure set but holds " + std::to_string(vs.size()) + " tuples");
  return o;
}

Outcome center_goldens() {
  Outcome o;
  const OutcomeSpace s(3);
  const auto all = Subalgebra::power_set(s);
  const auto phi = poly(3, {3});
  const auto psi = poly(3, {1, 2});
  const auto gamma = poly(3, {1, 2, 4});
  const auto delta = poly(3, {7});
  expect(o, phi_center(phi).members() == events({0, 3, 4, 7}), "center of w1*w2*");
  expect(o, phi_center(psi) == all, "center of w1*+w2*");
  expect(o, phi_center(gamma) == all, "center of w1*+w2*+w3*");
  expect(o, phi_center(delta).members() == events({0, 7}), "center of w1*w2*w3*");

  auto d = classical_domains(phi);
  expect(o, d.size() == 1 && d[0].members() == events({0, 3, 4, 7}), "domains of w1*w2*");
  d = classical_domains(psi);
  expect(o, d.size() == 2 && d[0].members() == events({0, 1, 4, 5}) && d[1].members() == events({0, 2, 4, 6}),
         "domains of w1*+w2*");
  d = classical_domains(gamma);
  expect(o,
         d.size() == 3 && d[0].members() == events({0, 1, 6, 7}) && d[1].members() == events({0, 2, 5, 7}) &&
             d[2].members() == events({0, 3, 4, 7}),
         "domains of w1*+w2*+w3*");
  d = classical_domains(delta);
  expect(o, d.size() == 1 && d[0].members() == events({0, 7}), "domains of w1*w2*w3*");

  const auto subs = center_subdomains(gamma);
  bool ok = subs.size() == 3;
  for (int i = 0; ok && i < 3; ++i) ok = subs[static_cast<std::size_t>(i)].members() == events({0, Mask{1} << i});
  expect(o, ok, "center subdomains of w1*+w2*+w3*");
  return o;
}

Outcome integral_forms() {
  Outcome o;
  std::size_t compared = 0;
  for (int n = 2; n <= 6; ++n) {
    const OutcomeSpace s(n);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (const auto& m : suite(n)) {
      for (int code = 0; code < total; ++code) {
        std::vector<Rational> v;
        for (int i = 0, c = code; i < n; ++i, c /= 3) v.emplace_back(c % 3);
        const OutcomeFunction f(s, v);
        if (q_integral(f, m) != q_integral_min_form(f, m)) {
          expect(o, false, "mismatch at n=" + std::to_string(n));
          return o;
        }
        ++compared;
      }
    }
  }
  o.detail = std::to_string(compared) + " pairs";
  return o;
}

Outcome lambda_contract() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const OutcomeSpace s(n);
    for (const auto& m : suite(n)) {
      const auto l = to_lambda(m);
      for (Mask a = 0; a < s.event_count(); ++a) {
        if (l.evaluate(Event{a}, Event{a}) != m.evaluate(Event{a})) {
          expect(o, false, "diagonal mismatch at n=" + std::to_string(n));
          return o;
        }
      }
    }
    expect(o, lambda_system_rank(s) == coordinate_count(n), "kernel not unique at n=" + std::to_string(n));
  }
  return o;
}

Outcome lebesgue_forms() {
  Outcome o;
  using leb2::ClosedFormKind;
  const leb2::QuadratureConfig cfg{2048};
  struct Case {
    std::string name;
    ClosedFormKind kind;
    int n;
    leb2::Integrand f;
    double a, b;
  };
  std::vector<Case> cases;
  for (int n : {0, 1, 2, 5}) {
    cases.push_back({"x^" + std::to_string(n) + " on [0,1]", ClosedFormKind::power, n, leb2::power(n), 0, 1});
    cases.push_back({"x^" + std::to_string(n) + " on [1/4,3/4]", ClosedFormKind::power, n, leb2::power(n), 0.25, 0.75});
  }
  cases.push_back({"exp on [0,1]", ClosedFormKind::exp, 0, leb2::exponential(), 0, 1});
  cases.push_back({"x^-3 on [1/2,1]", ClosedFormKind::inverse_power, 3, leb2::inverse_power(3), 0.5, 1});
  double worst = 0;
  for (const auto& c : cases) {
    const double exact = leb2::closed_form(c.kind, c.n, c.a, c.b);
    const double tol = 1e-6 * std::max(1.0, std::abs(exact));
    const auto iv = leb2::Interval::unit(c.a, c.b);
    const double g = leb2::integrate_general(c.f, iv, cfg);
    const double m = leb2::integrate_monotone(c.f, iv, cfg).value;
    worst = std::max({worst, std::abs(g - exact), std::abs(m - exact)});
    expect(o, std::abs(g - exact) <= tol, "general quadrature off for " + c.name);
    expect(o, std::abs(m - exact) <= tol, "monotone quadrature off for " + c.name);
  }
  expect(o, std::abs(leb2::closed_form(ClosedFormKind::exp, 0, 0, 1) - (2 * std::exp(1.0) - 4)) <= 1e-14, "exp value");
  expect(o, std::abs(leb2::closed_form(ClosedFormKind::inverse_power, 3, 1, 2) - 0.25) <= 1e-14, "x^-3 on [1,2]");
  expect(o, std::abs(leb2::closed_form(ClosedFormKind::inverse_power, 3, 0.5, 1) - 0.5) <= 1e-14, "x^-3 on [1/2,1]");
  if (o.pass) {
    std::ostringstream ss;
    ss << "max error " << std::scientific << std::setprecision(2) << worst;
    o.detail = ss.str();
  }
  return o;
}

Outcome transfer_goldens() {
  Outcome o;
  const OutcomeSpace s(2);
  const SignedQMeasure m(s, {Rational(1), Rational(1)}, {Rational(0)});
  const auto full = enumerate_logic(s, LogicKind::full);
  // full[4] = w1*w2*, full[5] = w1* + w1*w2*, full[6] = w2* + w1*w2*.
  const std::vector<Coevent> three{full[4], full[5], full[6]};
  auto r = transfer_feasible(m, three);
  expect(o, r.feasible && r.nu.satisfies_contract(m), "three-coevent logic should be feasible");
  const TransferMeasure witness({{full[5], m.evaluate(Event{1})}, {full[6], m.evaluate(Event{2})}, {full[4], m.evaluate(Event{3})}});
  expect(o, witness.satisfies_contract(m), "closed-form witness on the three-coevent logic");

  const auto additive = enumerate_logic(s, LogicKind::additive);
  r = transfer_feasible(m, additive);
  expect(o, r.feasible && r.nu.satisfies_contract(m), "additive logic should be feasible");
  expect(o, TransferMeasure({{full[3], 1}}).satisfies_contract(m), "weight 1 on w1*+w2*");

  const auto mult = enumerate_logic(s, LogicKind::multiplicative);
  r = transfer_feasible(m, mult);
  expect(o, !r.feasible, "multiplicative logic should be infeasible");
  if (!r.feasible) expect(o, certificate_valid(r.certificate, m, mult), "certificate fails substitution");
  return o;
}

Outcome boundary_sweep() {
  Outcome o;
  const OutcomeSpace s(2);
  const std::vector<Rational> grid{0, frac(1, 4), frac(1, 2), frac(3, 4), 1};
  const auto additive = enumerate_logic(s, LogicKind::additive);
  const auto mult = enumerate_logic(s, LogicKind::multiplicative);
  int cases = 0;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        const SignedQMeasure m(s, {a, b}, {c});
        if (!is_q_measure(m).is_q_measure) continue;
        ++cases;
        const Rational diff = a > b ? Rational(a - b) : Rational(b - a);
        const bool add_expected = diff <= c && c <= a + b;
        const bool mult_expected = c >= a + b;
        const auto ra = transfer_feasible(m, additive);
        const auto rm = transfer_feasible(m, mult);
        expect(o, ra.feasible == add_expected, "additive verdict at (" + format_rational(a) + "," + format_rational(b) + ";" + format_rational(c) + ")");
        expect(o, rm.feasible == mult_expected, "multiplicative verdict at (" + format_rational(a) + "," + format_rational(b) + ";" + format_rational(c) + ")");
        expect(o, additive_logic_interval(m).feasible == add_expected, "closed-form interval verdict");
        for (const auto* r : {&ra, &rm}) {
          if (r->feasible) {
            expect(o, r->nu.satisfies_contract(m), "contract");
          } else {
            expect(o, certificate_valid(r->certificate, m, r == &ra ? additive : mult), "certificate");
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome multiplicative_support() {
  Outcome o;
  std::ostringstream note;
  for (int n = 3; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const auto mult = enumerate_logic(s, LogicKind::multiplicative);
    MeasureSampler rs(4700 + static_cast<std::uint64_t>(n));
    int found = 0;
    int drawn = 0;
    while (found < 100 && drawn < 2000000) {
      const auto m = rs.q_measure(s);
      ++drawn;
      // Cheap necessary condition before the exact solve.
      bool pairwise = true;
      for (int i = 0; i < n && pairwise; ++i) {
        for (int j = i + 1; j < n && pairwise; ++j) pairwise = sgn(m.interference(i, j)) >= 0;
      }
      if (!pairwise) continue;
      const auto r = transfer_feasible(m, mult);
      if (!r.feasible) continue;
      ++found;
      expect(o, r.nu.satisfies_contract(m), "contract");
      expect(o, quadratic_support_check(r.nu), "support of degree above 2 at n=" + std::to_string(n));
    }
    expect(o, found == 100, "only " + std::to_string(found) + " feasible measures at n=" + std::to_string(n));
    note << "n=" << n << ": 100 of " << drawn << " draws  ";
  }
  if (o.pass) o.detail = note.str();
  return o;
}

Outcome center_exhaustive() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    const OutcomeSpace s(n);
    const std::uint64_t tables = std::uint64_t{1} << ((1U << n) - 1);
    for (std::uint64_t code = 0; code < tables; ++code) {
      const auto phi = Coevent::from_predicate(s, [code](Event a) { return ((code >> (a.bits - 1)) & 1U) != 0; });
      const auto members = phi_center(phi, Exec::serial).members();
      if (!is_subalgebra(members).ok) {
        expect(o, false, "center not closed");
        return o;
      }
      for (Event a : members) {
        for (Event b : members) {
          if ((a & b).empty() && phi(a | b) != (phi(a) != phi(b))) {
            expect(o, false, "restriction not additive");
            return o;
          }
        }
      }
    }
  }
  o.detail = "128 + 32768 coevents";
  return o;
}

Outcome pure_quadratic() {
  Outcome o;
  std::size_t total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_pure(OutcomeSpace(n))) {
      ++total;
      expect(o, p.coevent.degree() <= 2, "pure coevent of degree " + std::to_string(p.coevent.degree()));
    }
  }
  if (o.pass) o.detail = std::to_string(total) + " pure coevents";
  return o;
}

Outcome decomposition_soundness() {
  Outcome o;
  int cone_only = 0;
  for (int n = 2; n <= 4; ++n) {
    const OutcomeSpace s(n);
    MeasureSampler rs(4200 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 100; ++k) {
      const auto m = rs.q_measure(s);
      const auto d = decompose(m);
      if (!d.convex) ++cone_only;
      for (Mask a = 0; a < s.event_count(); ++a) {
        Rational v;
        for (const auto& t : d.terms) v += t.weight * t.component.measure.evaluate(Event{a});
        if (v != m.evaluate(Event{a})) {
          expect(o, false, "reconstruction mismatch at n=" + std::to_string(n));
          return o;
        }
      }
    }
  }
  o.detail = "300 exact; " + std::to_string(cone_only) + " at n=4 outside the convex hull of the pure measures";
  return o;
}

Outcome impure_witnesses() {
  Outcome o;
  const auto gamma = grade2_extension(poly(3, {1, 2, 4}));
  const auto psi = grade2_extension(poly(3, {1, 6}));
  const auto cg = check_pure(gamma);
  const auto cp = check_pure(psi);
  expect(o, !is_pure(gamma) && cg.witness == Event{7} && cg.witness_value == -3, "w1*+w2*+w3* witness");
  expect(o, !is_pure(psi) && cp.witness == Event{7} && cp.witness_value == 2, "w1*+w2*w3* witness");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pure counts: 8 on two outcomes, 34 on three", 1, pure_counts},
      {2, "vertices of the unit-bounded set equal the 34 pure tuples on three outcomes", 30, vertices_three},
      {3, "centers and classical domains of w1*w2*, w1*+w2*, w1*+w2*+w3*, w1*w2*w3*", 5, center_goldens},
      {4, "layer-cake and min-form integrals agree on {0,1,2}-valued f, n = 2..6", 60, integral_forms},
      {5, "lambda diagonal reproduces mu and its kernel is unique, n = 2..6", 30, lambda_contract},
      {6, "squared-length quadrature matches closed forms within 1e-6", 60, lebesgue_forms},
      {7, "(1,1;0) transfers: three-coevent and additive feasible, multiplicative certified infeasible", 1,
       transfer_goldens},
      {8, "two-outcome boundary sweep agrees with the interval criteria", 10, boundary_sweep},
      {9, "multiplicative transfers have support of degree at most 2, n = 3, 4", 60, multiplicative_support},
      {10, "every center on 3 and 4 outcomes is a subalgebra with additive restriction", 120, center_exhaustive},
      {11, "every pure coevent up to n = 5 has degree at most 2", 120, pure_quadratic},
      {12, "decompositions reconstruct 100 random q-measures per n = 2, 3, 4", 120, decomposition_soundness},
      {13, "impurity witnesses: value -3 and 2 on the full event", 1, impure_witnesses},
  };

  int mismatches = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > c.budget_seconds) {
      std::ostringstream ss;
      ss << "over budget (" << c.budget_seconds << " s)";
      if (o.pass) o.detail.clear();
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + ss.str();
    }
    const bool expected_fail = kExpectedFailures.contains(c.id);
    if (o.pass == expected_fail) ++mismatches;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << ". " << c.title << "  ["
              << std::fixed << std::setprecision(2) << seconds << " s]";
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    if (expected_fail) std::cout << (o.pass ? "  [unexpected pass]" : "  [expected]");
    std::cout << '\n';
  }
  std::cout << (mismatches == 0 ? "acceptance: all criteria match expectations\n"
                                : "acceptance: " + std::to_string(mismatches) + " criteria differ from expectations\n");
  return mismatches == 0 ? 0 : 1;
}
