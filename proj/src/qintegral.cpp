#include "qm/qintegral.hpp"

#include <algorithm>
#include <string>

#include "qm/errors.hpp"

namespace qm {
namespace {

void check_same_space(const OutcomeFunction& f, const SignedQMeasure& m) {
  if (!(f.space() == m.space())) throw InputError("function and measure live on different outcome spaces");
}

OutcomeFunction map_values(const OutcomeFunction& f, auto&& op) {
  std::vector<Rational> v;
  v.reserve(f.values().size());
  for (int i = 0; i < f.space().size(); ++i) v.push_back(op(i, f[i]));
  return OutcomeFunction(f.space(), std::move(v));
}

}  // namespace

CanonicalSimpleForm canonical_form(const OutcomeFunction& f) {
  const int n = f.space().size();
  for (int i = 0; i < n; ++i) {
    if (sgn(f[i]) < 0) {
      throw InputError("canonical form needs a nonnegative function; f(w" + std::to_string(i + 1) + ") = " +
                       format_rational(f[i]));
    }
  }
  CanonicalSimpleForm form;
  form.levels = f.values();
  std::sort(form.levels.begin(), form.levels.end());
  form.levels.erase(std::unique(form.levels.begin(), form.levels.end()), form.levels.end());
  form.cells.assign(form.levels.size(), Event{});
  for (int i = 0; i < n; ++i) {
    const auto it = std::lower_bound(form.levels.begin(), form.levels.end(), f[i]);
    form.cells[static_cast<std::size_t>(it - form.levels.begin())].bits |= Mask{1} << i;
  }
  return form;
}

Rational q_integral(const OutcomeFunction& f, const SignedQMeasure& m) {
  check_same_space(f, m);
  const auto form = canonical_form(f);
  const std::size_t k = form.levels.size();
  // tails[i] = A_i u ... u A_k
  std::vector<Event> tails(k + 1);
  for (std::size_t i = k; i-- > 0;) tails[i] = tails[i + 1] | form.cells[i];
  Rational total;
  Rational above = 0;  // mu(tails[i + 1])
  for (std::size_t i = k; i-- > 0;) {
    Rational here = m.evaluate(tails[i]);
    total += form.levels[i] * (here - above);
    above = std::move(here);
  }
  return total;
}

Rational q_integral_min_form(const OutcomeFunction& f, const SignedQMeasure& m) {
  check_same_space(f, m);
  const int n = f.space().size();
  for (int i = 0; i < n; ++i) {
    if (sgn(f[i]) < 0) throw InputError("min-form integral needs a nonnegative function");
  }
  Rational total;
  for (int i = 0; i < n; ++i) {
    total += m.single(i) * f[i];
    for (int j = i + 1; j < n; ++j) total += m.interference(i, j) * std::min(f[i], f[j]);
  }
  return total;
}

Rational q_integral_signed(const OutcomeFunction& f, const SignedQMeasure& m) {
  const auto plus = map_values(f, [](int, const Rational& v) { return sgn(v) > 0 ? v : Rational(0); });
  const auto minus = map_values(f, [](int, const Rational& v) { return sgn(v) < 0 ? Rational(-v) : Rational(0); });
  return q_integral(plus, m) - q_integral(minus, m);
}

Rational q_integral_over_event(const OutcomeFunction& f, const SignedQMeasure& m, Event a) {
  if (!f.space().contains(a)) throw InputError("event {" + format_event(a) + "} outside the outcome space");
  return q_integral_signed(map_values(f, [&](int i, const Rational& v) { return a.contains(i) ? v : Rational(0); }), m);
}

}  // namespace qm
