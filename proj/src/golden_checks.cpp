#include "qm/golden_checks.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <initializer_list>
#include <set>

#include "qm/classical.hpp"
#include "qm/coevent.hpp"
#include "qm/extremal.hpp"
#include "qm/lebesgue2.hpp"
#include "qm/qintegral.hpp"
#include "qm/qmeasure.hpp"
#include "qm/ratlp.hpp"
#include "qm/sampling.hpp"
#include "qm/transfer.hpp"

namespace qm {
namespace {

using Monomials = std::initializer_list<std::initializer_list<int>>;

Coevent poly(int n, Monomials monos) {
  PolynomialForm p;
  for (const auto& mono : monos) {
    Event s;
    for (const int i : mono) s = s | Event::singleton(i - 1);
    p.monomials.push_back(s);
  }
  std::sort(p.monomials.begin(), p.monomials.end());
  return Coevent::from_polynomial(OutcomeSpace(n), p);
}

SignedQMeasure measure(int n, std::vector<Rational> singles, std::vector<Rational> doubles) {
  return SignedQMeasure(OutcomeSpace(n), std::move(singles), std::move(doubles));
}

SignedQMeasure on_two(const Rational& a, const Rational& b, const Rational& whole) { return measure(2, {a, b}, {whole}); }

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::set<Event> events(int n, std::initializer_list<const char*> texts) {
  std::set<Event> out;
  for (const char* t : texts) out.insert(parse_event(t, OutcomeSpace(n)));
  return out;
}

std::set<Event> as_set(const Subalgebra& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

std::set<std::set<Event>> as_sets(const std::vector<Subalgebra>& list) {
  std::set<std::set<Event>> out;
  for (const auto& s : list) out.insert(as_set(s));
  return out;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

bool expect(bool ok, std::string& detail, const std::string& why) {
  if (!ok) detail = why;
  return ok;
}

// Example-8 style labels on two outcomes.
struct TwoOutcomeLogic {
  Coevent p1 = poly(2, {{1}});
  Coevent p2 = poly(2, {{2}});
  Coevent p3 = poly(2, {{1}, {2}});
  Coevent p4 = poly(2, {{1, 2}});
  Coevent p5 = poly(2, {{1}, {1, 2}});
  Coevent p6 = poly(2, {{2}, {1, 2}});
};

}  // namespace

std::vector<GoldenCheck> golden_checks(std::uint64_t seed) {
  std::vector<GoldenCheck> c;
  const OutcomeSpace two(2);
  const OutcomeSpace three(3);

  // q-measures
  c.push_back({"measure (1,1;0) on two outcomes has value 1 on {1} and 0 on the whole space", [](std::string& d) {
                 const auto m = on_two(1, 1, 0);
                 return expect(m.evaluate(Event{1}) == 1 && m.evaluate(Event{3}) == 0, d, "wrong event values");
               }});
  c.push_back({"singles (1,1,1), doubles (0,0,0) evaluate to -3 on the whole space", [](std::string& d) {
                 const auto m = measure(3, {1, 1, 1}, {0, 0, 0});
                 return expect(m.evaluate(Event{7}) == -3, d, "got " + format_rational(m.evaluate(Event{7})));
               }});
  c.push_back({"singles (1,1,1), doubles (0,0,0) is not a q-measure, witness {1,2,3}", [](std::string& d) {
                 const auto f = is_q_measure(measure(3, {1, 1, 1}, {0, 0, 0}));
                 return expect(!f.is_q_measure && f.witness == Event{7} && f.witness_value == -3, d, "wrong witness");
               }});
  c.push_back({"doubleton delta on three outcomes passes full-table validation and is a q-measure",
               [three](std::string& d) {
                 std::map<Event, Rational> table;
                 for (Mask a = 1; a < 8; ++a) table.emplace(Event{a}, (a & 3U) == 3U ? 1 : 0);
                 const auto m = from_full_table(three, table);
                 return expect(m == doubleton_delta(three, 0, 1) && is_q_measure(m).is_q_measure, d,
                               "table did not reproduce the doubleton delta");
               }});
  c.push_back({"doubleton delta is 0 on {1} and 1 on {1,2}", [two](std::string& d) {
                 const auto m = doubleton_delta(two, 0, 1);
                 return expect(m.evaluate(Event{1}) == 0 && m.evaluate(Event{2}) == 0 && m.evaluate(Event{3}) == 1, d,
                               "wrong values");
               }});
  c.push_back({"amplitude (1, i) has zero interference; basis coefficient is 2 Re v1 conj(v2)", [two](std::string& d) {
                 const std::vector<ComplexRational> amp{{1, 0}, {0, 1}};
                 const auto m = from_amplitude(two, amp);
                 const auto coeffs = basis_decomposition(m);
                 return expect(m.interference(0, 1) == 0 && coeffs.doubleton[0] == 0 && m.pair_value(0, 1) == 2, d,
                               "interference not zero");
               }});
  c.push_back({"amplitude (1, 1/2 + i/3) interference equals 2 Re v1 conj(v2)", [two](std::string& d) {
                 const std::vector<ComplexRational> amp{{1, 0}, {q(1, 2), q(1, 3)}};
                 const auto m = from_amplitude(two, amp);
                 return expect(basis_decomposition(m).doubleton[0] == 1, d, "expected 2*(1/2) = 1");
               }});

  // q-integral
  c.push_back({"integral of (2,5) against the doubleton delta is min(2,5) in both forms", [two](std::string& d) {
                 const OutcomeFunction f(two, {2, 5});
                 const auto m = doubleton_delta(two, 0, 1);
                 return expect(q_integral(f, m) == 2 && q_integral_min_form(f, m) == 2, d, "expected 2");
               }});

  // squared-length measure
  c.push_back({"squared-length integral of x on [0,1] is 1/3 (closed, monotone, general)", [](std::string& d) {
                 const auto iv = leb2::Interval::unit(0, 1);
                 const double closed = leb2::closed_form(leb2::ClosedFormKind::power, 1, 0, 1);
                 const double mono = leb2::integrate_monotone(leb2::power(1), iv, {}).value;
                 const double gen = leb2::integrate_general(leb2::power(1), iv, {});
                 return expect(close(closed, 1.0 / 3, 1e-12) && close(mono, 1.0 / 3, 1e-6) && close(gen, 1.0 / 3, 1e-6),
                               d, "value off 1/3");
               }});
  c.push_back({"squared-length integral of exp on [0,1] is 2e - 4", [](std::string& d) {
                 const double want = 2 * std::exp(1.0) - 4;
                 const auto iv = leb2::Interval::unit(0, 1);
                 return expect(close(leb2::closed_form(leb2::ClosedFormKind::exp, 0, 0, 1), want, 1e-12) &&
                                   close(leb2::integrate_monotone(leb2::exponential(), iv, {}).value, want, 1e-6) &&
                                   close(leb2::integrate_general(leb2::exponential(), iv, {}), want, 1e-6),
                               d, "value off 2e-4");
               }});
  c.push_back({"squared-length closed form for x^-3 on [1/2,1] matches quadrature", [](std::string& d) {
                 const auto iv = leb2::Interval::unit(0.5, 1);
                 const double closed = leb2::closed_form(leb2::ClosedFormKind::inverse_power, 3, 0.5, 1);
                 const double gen = leb2::integrate_general(leb2::inverse_power(3), iv, {});
                 return expect(close(closed, 0.5, 1e-12) && close(gen, closed, 1e-6), d, "mismatch");
               }});

  // coevents
  c.push_back({"evaluation map w1* is a homomorphism", [three](std::string& d) {
                 return expect(classify(evaluation_map(three, 0)).homomorphism, d, "not classified as homomorphism");
               }});
  c.push_back({"w1* w2* is 1 exactly on supersets of {1,2}", [three](std::string& d) {
                 const auto phi = evaluation_map(three, 0) * evaluation_map(three, 1);
                 for (Mask a = 0; a < 8; ++a) {
                   if (phi(Event{a}) != ((a & 3U) == 3U)) return expect(false, d, "wrong value");
                 }
                 return true;
               }});
  c.push_back({"w1* w2* w3* is multiplicative and not quadratic", [](std::string& d) {
                 const auto k = classify(poly(3, {{1, 2, 3}}));
                 return expect(k.multiplicative && !k.quadratic, d, "wrong class");
               }});
  c.push_back({"full logic on two outcomes has 8 coevents", [two](std::string& d) {
                 return expect(enumerate_logic(two, LogicKind::full).size() == 8, d, "wrong count");
               }});
  c.push_back({"full logic on three outcomes has 128 coevents", [three](std::string& d) {
                 return expect(enumerate_logic(three, LogicKind::full).size() == 128, d, "wrong count");
               }});
  c.push_back({"quadratic logic on three outcomes has 64 coevents", [three](std::string& d) {
                 return expect(enumerate_logic(three, LogicKind::quadratic).size() == 64, d, "wrong count");
               }});
  c.push_back({"additive and multiplicative logics on three outcomes have 8 coevents each", [three](std::string& d) {
                 return expect(enumerate_logic(three, LogicKind::additive).size() == 8 &&
                                   enumerate_logic(three, LogicKind::multiplicative).size() == 8,
                               d, "wrong count");
               }});

  // centers and classical domains
  c.push_back({"center of w1* w2* on three outcomes is {0, {3}, {1,2}, all}, its only classical domain",
               [](std::string& d) {
                 const auto phi = poly(3, {{1, 2}});
                 const auto want = events(3, {"", "3", "1,2", "1,2,3"});
                 const auto center = phi_center(phi);
                 const auto domains = classical_domains(phi);
                 return expect(as_set(center) == want && domains.size() == 1 && as_set(domains[0]) == want, d,
                               "center or domains differ");
               }});
  c.push_back({"center of w1* + w2* is the whole algebra; two classical domains", [](std::string& d) {
                 const auto psi = poly(3, {{1}, {2}});
                 const std::set<std::set<Event>> want{events(3, {"", "1", "3", "1,3"}), events(3, {"", "2", "3", "2,3"})};
                 return expect(phi_center(psi).member_count() == 8 && as_sets(classical_domains(psi)) == want, d,
                               "center or domains differ");
               }});
  c.push_back({"w1* + w2* + w3*: whole-algebra center, three singleton subdomains, three domains",
               [](std::string& d) {
                 const auto g = poly(3, {{1}, {2}, {3}});
                 const std::set<std::set<Event>> subs{events(3, {"", "1"}), events(3, {"", "2"}), events(3, {"", "3"})};
                 const std::set<std::set<Event>> doms{events(3, {"", "1", "2,3", "1,2,3"}),
                                                      events(3, {"", "2", "1,3", "1,2,3"}),
                                                      events(3, {"", "3", "1,2", "1,2,3"})};
                 return expect(phi_center(g).member_count() == 8 && as_sets(center_subdomains(g)) == subs &&
                                   as_sets(classical_domains(g)) == doms,
                               d, "center, subdomains or domains differ");
               }});
  c.push_back({"w1* w2* w3* has the single classical domain {0, all}", [](std::string& d) {
                 const auto delta = poly(3, {{1, 2, 3}});
                 const auto want = events(3, {"", "1,2,3"});
                 const auto doms = classical_domains(delta);
                 const auto subs = center_subdomains(delta);
                 return expect(doms.size() == 1 && as_set(doms[0]) == want && subs.size() == 1 && as_set(subs[0]) == want,
                               d, "domains differ");
               }});
  c.push_back({"{0, {3}, {1,2}, all} is a subalgebra", [](std::string& d) {
                 const auto s = events(3, {"", "3", "1,2", "1,2,3"});
                 return expect(is_subalgebra({s.begin(), s.end()}).ok, d, "rejected");
               }});

  // pure measures and extremality
  c.push_back({"(1,1;0) on two outcomes is pure", [](std::string& d) {
                 return expect(is_pure(on_two(1, 1, 0)), d, "not pure");
               }});
  c.push_back({"w1* + w2* + w3* read as a measure is not pure; value -3 on {1,2,3}", [](std::string& d) {
                 const auto r = check_pure(grade2_extension(poly(3, {{1}, {2}, {3}})));
                 return expect(!r.pure && r.witness == Event{7} && r.witness_value == -3, d, "wrong verdict");
               }});
  c.push_back({"w1* + w2* w3* read as a measure is not pure; value 2 on {1,2,3}", [](std::string& d) {
                 const auto r = check_pure(grade2_extension(poly(3, {{1}, {2, 3}})));
                 return expect(!r.pure && r.witness == Event{7} && r.witness_value == 2, d, "wrong verdict");
               }});
  c.push_back({"the listed pure coevents on three outcomes are pure", [](std::string& d) {
                 const std::vector<Coevent> listed{
                     poly(3, {{1}}),
                     poly(3, {{1}, {2}}),
                     poly(3, {{1}, {1, 2}}),
                     poly(3, {{1, 2}}),
                     poly(3, {{1}, {2}, {1, 2}}),
                     poly(3, {{1}, {1, 2}, {2, 3}}),
                     poly(3, {{1}, {2}, {1, 2}, {1, 3}}),
                     poly(3, {{1}, {1, 2}, {1, 3}, {2, 3}}),
                     poly(3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}),
                 };
                 for (const auto& phi : listed) {
                   const auto m = grade2_extension(phi);
                   if (!is_pure(m) || Coevent::from_predicate(phi.space(), [&](Event a) { return m.evaluate(a) == 1; }) != phi) {
                     return expect(false, d, "a listed coevent is not pure");
                   }
                 }
                 return true;
               }});
  c.push_back({"every coevent on two outcomes is pure: 8 pure measures", [two](std::string& d) {
                 return expect(enumerate_pure(two).size() == 8, d, "wrong count");
               }});
  c.push_back({"34 nonzero pure coevents on three outcomes (35 with the zero measure)", [three](std::string& d) {
                 const auto pure = enumerate_pure(three);
                 const auto nonzero = std::count_if(pure.begin(), pure.end(), [](const PureQMeasure& p) { return !p.coevent.is_zero(); });
                 return expect(pure.size() == 35 && nonzero == 34, d, "got " + std::to_string(nonzero) + " nonzero");
               }});
  c.push_back({"a bounded measure with 0 < mu({1}) < 1 is not extremal", [](std::string& d) {
                 const auto m = on_two(q(1, 2), 0, q(1, 2));
                 const auto p = extremality_perturbation(m);
                 return expect(!is_extremal(m) && p.has_value(), d, "reported extremal");
               }});
  c.push_back({"vertices of the bounded q-measures on two outcomes are the 8 pure measures", [two](std::string& d) {
                 return expect(vertices_of_M(two).size() == 8, d, "wrong vertex count");
               }});
  // Four outcomes: the extreme points are not all pure, and some are not even
  // nonnegative combinations of pure measures.
  c.push_back({"on four outcomes (0,1/2,1,0;0,1,1/2,1,0,1/2) is a bounded extreme point that is not pure", [](std::string& d) {
                 const auto x = measure(4, {0, q(1, 2), 1, 0}, {0, 1, q(1, 2), 1, 0, q(1, 2)});
                 return expect(is_q_measure(x).is_q_measure && max_value(x) == 1 && is_extremal(x) && !is_pure(x), d,
                               "not a non-pure extreme point");
               }});
  c.push_back({"on four outcomes (0,0,0,1;1,1,0,1,0,0) transfers to no measure on the pure logic", [](std::string& d) {
                 const auto m = measure(4, {0, 0, 0, 1}, {1, 1, 0, 1, 0, 0});
                 const auto pure = LogicSelection::named(LogicSelectionKind::pure).materialize(m.space());
                 const auto r = transfer_feasible(m, pure);
                 return expect(is_q_measure(m).is_q_measure && !r.feasible && certificate_valid(r.certificate, m, pure), d,
                               "unexpectedly feasible");
               }});

  // transfer
  c.push_back({"ordinary measure transfers onto evaluation maps with the same weights", [three](std::string& d) {
                 const auto m = measure(3, {q(1, 2), q(1, 3), 0}, {q(5, 6), q(1, 2), q(1, 3)});
                 const auto nu = transfer_constructive(m, LogicSelection::named(LogicSelectionKind::pure).materialize(three));
                 return expect(nu.terms().size() == 2 && nu.weight(evaluation_map(three, 0)) == q(1, 2) &&
                                   nu.weight(evaluation_map(three, 1)) == q(1, 3),
                               d, "unexpected support");
               }});
  c.push_back({"(1,1;0) transfers to weight 1 on w1* + w2*", [two](std::string& d) {
                 const TwoOutcomeLogic l;
                 const TransferMeasure nu({{l.p3, 1}});
                 const auto built = transfer_constructive(on_two(1, 1, 0), LogicSelection::named(LogicSelectionKind::pure).materialize(two));
                 return expect(nu.satisfies_contract(on_two(1, 1, 0)) && built.satisfies_contract(on_two(1, 1, 0)), d,
                               "contract fails");
               }});
  c.push_back({"(1,1;0) transfers onto {w1*w2*, w1* + w1*w2*, w2* + w1*w2*} with weights (0,1,1)", [](std::string& d) {
                 const TwoOutcomeLogic l;
                 const auto m = on_two(1, 1, 0);
                 const auto r = transfer_feasible(m, {l.p4, l.p5, l.p6});
                 const TransferMeasure witness({{l.p5, 1}, {l.p6, 1}});
                 return expect(r.feasible && witness.satisfies_contract(m), d, "not feasible");
               }});
  c.push_back({"every sampled q-measure on two outcomes transfers onto {w1*w2*, w1* + w1*w2*, w2* + w1*w2*}",
               [seed, two](std::string& d) {
                 const TwoOutcomeLogic l;
                 MeasureSampler sampler(seed);
                 for (int k = 0; k < 50; ++k) {
                   const auto m = sampler.q_measure(two);
                   const TransferMeasure nu({{l.p4, m.pair_value(0, 1)}, {l.p5, m.single(0)}, {l.p6, m.single(1)}});
                   if (!nu.satisfies_contract(m) || !transfer_feasible(m, {l.p4, l.p5, l.p6}).feasible) {
                     return expect(false, d, "a sampled measure failed");
                   }
                 }
                 return true;
               }});
  c.push_back({"(1,1;0) does not transfer onto the multiplicative logic; certificate checks", [two](std::string& d) {
                 const auto logic = enumerate_logic(two, LogicKind::multiplicative);
                 const auto r = transfer_feasible(on_two(1, 1, 0), logic);
                 return expect(!r.feasible && certificate_valid(r.certificate, on_two(1, 1, 0), logic), d,
                               "unexpectedly feasible");
               }});
  c.push_back({"multiplicative transfer on two outcomes iff mu(all) >= mu1 + mu2 (grid sweep)", [two](std::string& d) {
                 const auto logic = enumerate_logic(two, LogicKind::multiplicative);
                 for (int a = 0; a <= 4; ++a) {
                   for (int b = 0; b <= 4; ++b) {
                     for (int w = 0; w <= 4; ++w) {
                       const auto m = on_two(q(a, 4), q(b, 4), q(w, 4));
                       if (transfer_feasible(m, logic).feasible != (w >= a + b)) return expect(false, d, "disagreement");
                     }
                   }
                 }
                 return true;
               }});
  c.push_back({"additive transfer on two outcomes iff |mu1 - mu2| <= mu(all) <= mu1 + mu2 (grid sweep)",
               [two](std::string& d) {
                 const auto logic = enumerate_logic(two, LogicKind::additive);
                 for (int a = 0; a <= 4; ++a) {
                   for (int b = 0; b <= 4; ++b) {
                     for (int w = 0; w <= 4; ++w) {
                       const auto m = on_two(q(a, 4), q(b, 4), q(w, 4));
                       const auto closed = additive_logic_interval(m);
                       const bool want = std::abs(a - b) <= w && w <= a + b;
                       if (closed.feasible != want || transfer_feasible(m, logic).feasible != want ||
                           (want && !closed.measure(two).satisfies_contract(m))) {
                         return expect(false, d, "disagreement");
                       }
                     }
                   }
                 }
                 return true;
               }});
  c.push_back({"(1,1;0) on the additive logic: closed form puts weight 1 on w1* + w2*", [two](std::string& d) {
                 const auto r = additive_logic_interval(on_two(1, 1, 0));
                 return expect(r.feasible && r.nu12 == 1 && r.nu1 == 0 && r.nu2 == 0, d, "wrong closed form");
               }});
  c.push_back({"(1/4,1/4;1) on the multiplicative logic: weights 1/4, 1/4, 1/2", [two](std::string& d) {
                 const auto m = on_two(q(1, 4), q(1, 4), 1);
                 const TwoOutcomeLogic l;
                 const TransferMeasure nu({{l.p1, q(1, 4)}, {l.p2, q(1, 4)}, {l.p4, q(1, 2)}});
                 return expect(nu.satisfies_contract(m) &&
                                   transfer_feasible(m, enumerate_logic(two, LogicKind::multiplicative)).feasible,
                               d, "contract fails");
               }});
  c.push_back({"multiplicative transfers of sampled measures on 3 outcomes use degree <= 2 only",
               [seed, three](std::string& d) {
                 MeasureSampler sampler(seed + 1);
                 const auto logic = enumerate_logic(three, LogicKind::multiplicative);
                 for (int k = 0; k < 40; ++k) {
                   const auto r = transfer_feasible(sampler.q_measure(three), logic);
                   if (r.feasible && !quadratic_support_check(r.nu)) return expect(false, d, "degree 3 in support");
                 }
                 return true;
               }});

  // exact feasibility systems
  c.push_back({"two-outcome multiplicative system for (1,1;0) is infeasible", [](std::string& d) {
                 RationalMatrix a(3, 3);
                 // columns w1*, w2*, w1*w2*; rows {1}, {2}, {1,2}
                 a(0, 0) = 1;
                 a(1, 1) = 1;
                 a(2, 0) = 1;
                 a(2, 1) = 1;
                 a(2, 2) = 1;
                 const std::vector<Rational> b{1, 1, 0};
                 return expect(!solve_feasibility(a, b).feasible(), d, "feasible");
               }});
  c.push_back({"two-outcome system over {w1*w2*, w1* + w1*w2*, w2* + w1*w2*} gives x = (0,1,1)", [](std::string& d) {
                 RationalMatrix a(3, 3);
                 a(0, 1) = 1;
                 a(1, 2) = 1;
                 a(2, 0) = 1;
                 const std::vector<Rational> b{1, 1, 0};
                 const auto r = solve_feasibility(a, b);
                 return expect(r.feasible() && r.solution == std::vector<Rational>{0, 1, 1}, d, "wrong solution");
               }});
  return c;
}

std::vector<GoldenResult> run_golden_checks(std::uint64_t seed, bool parallel) {
  const auto checks = golden_checks(seed);
  std::vector<GoldenResult> out(checks.size());
  const auto count = static_cast<std::int64_t>(checks.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& check = checks[static_cast<std::size_t>(k)];
    auto& r = out[static_cast<std::size_t>(k)];
    r.label = check.label;
    try {
      r.pass = check.run(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
  }
  return out;
}

}  // namespace qm
