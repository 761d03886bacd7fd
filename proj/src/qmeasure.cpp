#include "qm/qmeasure.hpp"

#include <string>

#include "qm/ratlp.hpp"
#include "scaled.hpp"

namespace qm {
namespace {

void check_index(const OutcomeSpace& space, int i) {
  if (i < 0 || i >= space.size()) {
    throw InputError("outcome " + std::to_string(i + 1) + " outside 1.." + std::to_string(space.size()));
  }
}

std::string triple_text(Event a, Event b, Event c) {
  return "({" + format_event(a) + "},{" + format_event(b) + "},{" + format_event(c) + "})";
}

}  // namespace

SignedQMeasure::SignedQMeasure(OutcomeSpace space, std::vector<Rational> singles, std::vector<Rational> doubles)
    : space_(space), singles_(std::move(singles)), doubles_(std::move(doubles)) {
  const int n = space_.size();
  if (singles_.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " singleton values, got " + std::to_string(singles_.size()));
  }
  if (doubles_.size() != pair_count(n)) {
    throw InputError("expected " + std::to_string(pair_count(n)) + " doubleton values, got " +
                     std::to_string(doubles_.size()));
  }
}

SignedQMeasure SignedQMeasure::zero(OutcomeSpace space) {
  return SignedQMeasure(space, std::vector<Rational>(static_cast<std::size_t>(space.size())),
                        std::vector<Rational>(pair_count(space.size())));
}

SignedQMeasure SignedQMeasure::from_coordinates(OutcomeSpace space, std::span<const Rational> coords) {
  const auto n = static_cast<std::size_t>(space.size());
  if (coords.size() != coordinate_count(space.size())) {
    throw InputError("expected " + std::to_string(coordinate_count(space.size())) + " coordinates");
  }
  return SignedQMeasure(space, std::vector<Rational>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(n)),
                        std::vector<Rational>(coords.begin() + static_cast<std::ptrdiff_t>(n), coords.end()));
}

const Rational& SignedQMeasure::pair_value(int i, int j) const {
  check_index(space_, i);
  check_index(space_, j);
  if (i == j) throw InputError("doubleton needs two distinct outcomes");
  if (i > j) std::swap(i, j);
  return doubles_[pair_index(space_.size(), i, j)];
}

std::vector<Rational> SignedQMeasure::coordinates() const {
  std::vector<Rational> out = singles_;
  out.insert(out.end(), doubles_.begin(), doubles_.end());
  return out;
}

Rational SignedQMeasure::evaluate(Event a) const {
  if (!space_.contains(a)) throw InputError("event {" + format_event(a) + "} outside the outcome space");
  const int k = a.size();
  if (k == 0) return 0;
  if (k == 1) return singles_[static_cast<std::size_t>(std::countr_zero(a.bits))];
  const int n = space_.size();
  Rational pairs;
  Rational single_sum;
  for (Mask x = a.bits; x != 0; x &= x - 1) {
    const int i = std::countr_zero(x);
    single_sum += singles_[static_cast<std::size_t>(i)];
    for (Mask y = x & (x - 1); y != 0; y &= y - 1) pairs += doubles_[pair_index(n, i, std::countr_zero(y))];
  }
  return pairs - (k - 2) * single_sum;
}

Rational SignedQMeasure::interference(int i, int j) const {
  if (i == j) throw InputError("interference term needs two distinct outcomes");
  return pair_value(i, j) - single(i) - single(j);
}

std::vector<Rational> SignedQMeasure::full_table() const {
  const int n = space_.size();
  if (n > 20) throw ResourceError("full event table capped at n=20");
  std::vector<Rational> interference_table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational v = interference(i, j);
      interference_table[static_cast<std::size_t>(i * n + j)] = v;
      interference_table[static_cast<std::size_t>(j * n + i)] = v;
    }
  }
  // mu(A) = mu(A - {l}) + mu({w_l}) + sum_{i in A - {l}} I_il, l the lowest outcome.
  std::vector<Rational> table(space_.event_count());
  for (std::uint64_t m = 1; m < space_.event_count(); ++m) {
    const auto mask = static_cast<Mask>(m);
    const int l = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    Rational v = table[rest] + singles_[static_cast<std::size_t>(l)];
    for (Mask x = rest; x != 0; x &= x - 1) v += interference_table[static_cast<std::size_t>(std::countr_zero(x) * n + l)];
    table[m] = std::move(v);
  }
  return table;
}

bool SignedQMeasure::is_additive() const {
  const int n = space_.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sgn(interference(i, j)) != 0) return false;
    }
  }
  return true;
}

SignedQMeasure operator+(const SignedQMeasure& a, const SignedQMeasure& b) {
  if (!(a.space_ == b.space_)) throw InputError("measures live on different outcome spaces");
  SignedQMeasure out = a;
  for (std::size_t i = 0; i < out.singles_.size(); ++i) out.singles_[i] += b.singles_[i];
  for (std::size_t i = 0; i < out.doubles_.size(); ++i) out.doubles_[i] += b.doubles_[i];
  return out;
}

SignedQMeasure operator-(const SignedQMeasure& a, const SignedQMeasure& b) { return a + Rational(-1) * b; }

SignedQMeasure operator*(const Rational& s, const SignedQMeasure& m) {
  SignedQMeasure out = m;
  for (auto& v : out.singles_) v *= s;
  for (auto& v : out.doubles_) v *= s;
  return out;
}

Grade2Violation::Grade2Violation(Event a_, Event b_, Event c_)
    : InputError("grade-2 additivity fails on " + triple_text(a_, b_, c_)), a(a_), b(b_), c(c_) {}

SignedQMeasure from_full_table(const OutcomeSpace& space, const std::map<Event, Rational>& table) {
  const int n = space.size();
  if (n > 16) throw ResourceError("full-table input capped at n=16");
  std::vector<Rational> values(space.event_count());
  for (const auto& [event, value] : table) {
    if (!space.contains(event)) throw InputError("table event {" + format_event(event) + "} outside the space");
    if (event.empty() && sgn(value) != 0) throw InputError("table assigns a nonzero value to the empty event");
    values[event.bits] = value;
  }
  for (std::uint64_t m = 1; m < space.event_count(); ++m) {
    if (!table.contains(Event{static_cast<Mask>(m)})) {
      throw InputError("table is missing event {" + format_event(Event{static_cast<Mask>(m)}) + "}");
    }
  }
  std::vector<Rational> singles(static_cast<std::size_t>(n));
  std::vector<Rational> doubles(pair_count(n));
  for (int i = 0; i < n; ++i) {
    singles[static_cast<std::size_t>(i)] = values[Event::singleton(i).bits];
    for (int j = i + 1; j < n; ++j) doubles[pair_index(n, i, j)] = values[Event::pair(i, j).bits];
  }
  SignedQMeasure m(space, std::move(singles), std::move(doubles));

  // The table is grade-2 additive iff it agrees with the measure its
  // singletons and doubletons generate; only on disagreement do we search
  // for the offending triple.
  const auto derived = m.full_table();
  bool agrees = true;
  for (std::uint64_t e = 1; e < space.event_count() && agrees; ++e) agrees = derived[e] == values[e];
  if (agrees) return m;

  const Mask full = space.full_mask();
  for (Mask a = 1; a <= full; ++a) {
    const Mask rest_a = full & ~a;
    for (Mask b = rest_a; b != 0; b = (b - 1) & rest_a) {
      if (b <= a) continue;
      const Mask rest_ab = rest_a & ~b;
      for (Mask c = rest_ab; c != 0; c = (c - 1) & rest_ab) {
        if (c <= b) continue;
        const Rational rhs = values[a | b] + values[a | c] + values[b | c] - values[a] - values[b] - values[c];
        if (values[a | b | c] != rhs) throw Grade2Violation(Event{a}, Event{b}, Event{c});
      }
    }
  }
  throw DefectError("table disagrees with its generated measure but no grade-2 violation was found");
}

SignedQMeasure dirac(const OutcomeSpace& space, int i) {
  check_index(space, i);
  auto m = SignedQMeasure::zero(space);
  std::vector<Rational> singles = m.singles();
  std::vector<Rational> doubles = m.doubles();
  singles[static_cast<std::size_t>(i)] = 1;
  for (int j = 0; j < space.size(); ++j) {
    if (j != i) doubles[pair_index(space.size(), std::min(i, j), std::max(i, j))] = 1;
  }
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

SignedQMeasure doubleton_delta(const OutcomeSpace& space, int i, int j) {
  check_index(space, i);
  check_index(space, j);
  if (i == j) throw InputError("doubleton delta needs two distinct outcomes");
  std::vector<Rational> singles(static_cast<std::size_t>(space.size()));
  std::vector<Rational> doubles(pair_count(space.size()));
  doubles[pair_index(space.size(), std::min(i, j), std::max(i, j))] = 1;
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

BasisCoefficients basis_decomposition(const SignedQMeasure& m) {
  const int n = m.space().size();
  BasisCoefficients out;
  out.dirac = m.singles();
  out.doubleton.resize(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.doubleton[pair_index(n, i, j)] = m.interference(i, j);
  }
  return out;
}

SignedQMeasure recompose(const OutcomeSpace& space, const BasisCoefficients& coefficients) {
  const int n = space.size();
  if (coefficients.dirac.size() != static_cast<std::size_t>(n) || coefficients.doubleton.size() != pair_count(n)) {
    throw InputError("basis coefficient count does not match the space");
  }
  auto out = SignedQMeasure::zero(space);
  for (int i = 0; i < n; ++i) out = out + coefficients.dirac[static_cast<std::size_t>(i)] * dirac(space, i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out = out + coefficients.doubleton[pair_index(n, i, j)] * doubleton_delta(space, i, j);
    }
  }
  return out;
}

SymmetricSignedMeasure::SymmetricSignedMeasure(OutcomeSpace space, std::vector<Rational> alpha)
    : space_(space), alpha_(std::move(alpha)) {
  const auto n = static_cast<std::size_t>(space_.size());
  if (alpha_.size() != n * n) throw InputError("kernel must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alpha_[i * n + j] != alpha_[j * n + i]) throw InputError("kernel is not symmetric");
    }
  }
}

Rational SymmetricSignedMeasure::evaluate(Event a, Event b) const {
  if (!space_.contains(a) || !space_.contains(b)) throw InputError("event outside the outcome space");
  Rational s;
  for (Mask x = a.bits; x != 0; x &= x - 1) {
    const int i = std::countr_zero(x);
    for (Mask y = b.bits; y != 0; y &= y - 1) s += alpha(i, std::countr_zero(y));
  }
  return s;
}

SymmetricSignedMeasure to_lambda(const SignedQMeasure& m) {
  const int n = m.space().size();
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> alpha(un * un);
  for (int i = 0; i < n; ++i) {
    alpha[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(i)] = m.single(i);
    for (int j = i + 1; j < n; ++j) {
      const Rational half = m.interference(i, j) / 2;
      alpha[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = half;
      alpha[static_cast<std::size_t>(j) * un + static_cast<std::size_t>(i)] = half;
    }
  }
  return SymmetricSignedMeasure(m.space(), std::move(alpha));
}

std::size_t lambda_system_rank(const OutcomeSpace& space) {
  const int n = space.size();
  if (n > 10) throw ResourceError("kernel uniqueness check capped at n=10");
  RationalMatrix system;
  for (Mask a = 1; a <= space.full_mask(); ++a) {
    std::vector<Rational> row(coordinate_count(n));
    for (int i = 0; i < n; ++i) {
      if (!Event{a}.contains(i)) continue;
      row[static_cast<std::size_t>(i)] = 1;
      for (int j = i + 1; j < n; ++j) {
        if (Event{a}.contains(j)) row[static_cast<std::size_t>(n) + pair_index(n, i, j)] = 2;
      }
    }
    system.append_row(row);
  }
  return rank(system);
}

SignedQMeasure from_amplitude(const OutcomeSpace& space, std::span<const ComplexRational> amplitude) {
  const int n = space.size();
  if (amplitude.size() != static_cast<std::size_t>(n)) throw InputError("amplitude length does not match n");
  auto norm2 = [](const Rational& re, const Rational& im) { return Rational(re * re + im * im); };
  std::vector<Rational> singles(static_cast<std::size_t>(n));
  std::vector<Rational> doubles(pair_count(n));
  for (int i = 0; i < n; ++i) {
    const auto& a = amplitude[static_cast<std::size_t>(i)];
    singles[static_cast<std::size_t>(i)] = norm2(a.re, a.im);
    for (int j = i + 1; j < n; ++j) {
      const auto& b = amplitude[static_cast<std::size_t>(j)];
      doubles[pair_index(n, i, j)] = norm2(a.re + b.re, a.im + b.im);
    }
  }
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

QMeasureFlag is_q_measure(const SignedQMeasure& m, Exec exec) {
  const std::uint64_t count = m.space().event_count();
  std::optional<std::uint64_t> first;
  if (const auto scaled = detail::ScaledMeasure::make(m)) {
    first = find_first(count, [&](std::uint64_t e) { return scaled->evaluate(static_cast<Mask>(e)) < 0; }, exec);
  } else {
    first = find_first(count, [&](std::uint64_t e) { return sgn(m.evaluate(Event{static_cast<Mask>(e)})) < 0; }, exec);
  }
  QMeasureFlag flag;
  if (first) {
    flag.is_q_measure = false;
    flag.witness = Event{static_cast<Mask>(*first)};
    flag.witness_value = m.evaluate(*flag.witness);
  }
  return flag;
}

Rational max_value(const SignedQMeasure& m) {
  Rational best;
  for (std::uint64_t e = 0; e < m.space().event_count(); ++e) {
    Rational v = m.evaluate(Event{static_cast<Mask>(e)});
    if (v > best) best = std::move(v);
  }
  return best;
}

}  // namespace qm
