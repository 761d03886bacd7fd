#include "qm/sampling.hpp"

#include "qm/errors.hpp"
#include "qm/extremal.hpp"

namespace qm {

int MeasureSampler::denominator() {
  static constexpr int kDenominators[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> pick(0, 4);
  return kDenominators[pick(rng_)];
}

Rational MeasureSampler::grid(int lo, int hi, int q) {
  std::uniform_int_distribution<int> pick(lo, hi);
  Rational r(pick(rng_), q);
  r.canonicalize();
  return r;
}

SignedQMeasure MeasureSampler::q_measure(const OutcomeSpace& space) {
  const int n = space.size();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int q = denominator();
    std::vector<Rational> singles(static_cast<std::size_t>(n));
    for (auto& s : singles) s = grid(0, 4, q);
    std::vector<Rational> doubles(pair_count(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        doubles[pair_index(n, i, j)] = singles[static_cast<std::size_t>(i)] + singles[static_cast<std::size_t>(j)] + grid(-4, 4, q);
      }
    }
    SignedQMeasure m(space, std::move(singles), std::move(doubles));
    if (is_q_measure(m, Exec::serial).is_q_measure) return m;
  }
  throw DefectError("q-measure sampler exhausted its attempts");
}

SignedQMeasure MeasureSampler::additive_measure(const OutcomeSpace& space) {
  const int n = space.size();
  const int q = denominator();
  std::vector<Rational> singles(static_cast<std::size_t>(n));
  for (auto& s : singles) s = grid(0, 4, q);
  std::vector<Rational> doubles(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) doubles[pair_index(n, i, j)] = singles[static_cast<std::size_t>(i)] + singles[static_cast<std::size_t>(j)];
  }
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

SignedQMeasure MeasureSampler::unit_bounded(const OutcomeSpace& space) {
  auto m = q_measure(space);
  const Rational top = max_value(m);
  if (sgn(top) == 0) return m;
  return Rational(1) / top * m;
}

SignedQMeasure MeasureSampler::non_pure_unit_bounded(const OutcomeSpace& space) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto m = unit_bounded(space);
    if (!is_pure(m, Exec::serial)) return m;
  }
  throw DefectError("non-pure sampler exhausted its attempts");
}

TransferMeasure MeasureSampler::weights_on(const std::vector<Coevent>& logic) {
  const int q = denominator();
  std::bernoulli_distribution keep(0.5);
  std::vector<TransferTerm> terms;
  for (const auto& phi : logic) {
    if (phi.is_zero() || !keep(rng_)) continue;
    terms.push_back({phi, grid(0, 4, q)});
  }
  return TransferMeasure(std::move(terms));
}

OutcomeFunction MeasureSampler::function(const OutcomeSpace& space, const std::vector<Rational>& values) {
  if (values.empty()) throw InputError("no values to draw from");
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<Rational> out(static_cast<std::size_t>(space.size()));
  for (auto& v : out) v = values[pick(rng_)];
  return OutcomeFunction(space, std::move(out));
}

}  // namespace qm
