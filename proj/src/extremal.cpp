#include "qm/extremal.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "qm/errors.hpp"
#include "scaled.hpp"

namespace qm {
namespace {

std::uint64_t reverse_bits(std::uint64_t t, std::size_t width) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < width; ++i) r |= ((t >> i) & 1U) << (width - 1 - i);
  return r;
}

// Candidate t assigns bit r to coordinate r (singles first, then pairs).
// Fills values[A] for every event and returns false at the first value
// outside {0,1}.
bool candidate_values(int n, std::uint64_t t, std::array<int, 64>& values) {
  std::array<int, 6> s{};
  std::array<std::array<int, 6>, 6> interference{};
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = static_cast<int>((t >> i) & 1U);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = static_cast<int>((t >> (static_cast<std::size_t>(n) + pair_index(n, i, j))) & 1U);
      const int v = d - s[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(j)];
      interference[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      interference[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }
  values[0] = 0;
  const Mask count = Mask{1} << n;
  for (Mask a = 1; a < count; ++a) {
    const int l = std::countr_zero(a);
    const Mask rest = a & (a - 1);
    int v = values[rest] + s[static_cast<std::size_t>(l)];
    for (Mask x = rest; x != 0; x &= x - 1) v += interference[static_cast<std::size_t>(std::countr_zero(x))][static_cast<std::size_t>(l)];
    if (v != 0 && v != 1) return false;
    values[a] = v;
  }
  return true;
}

PureQMeasure pure_from_candidate(const OutcomeSpace& space, std::uint64_t t) {
  const int n = space.size();
  std::array<int, 64> values{};
  if (!candidate_values(n, t, values)) throw DefectError("pure candidate rejected on rebuild");
  std::vector<Rational> coords(coordinate_count(n));
  for (std::size_t r = 0; r < coords.size(); ++r) coords[r] = static_cast<long>((t >> r) & 1U);
  auto phi = Coevent::from_predicate(space, [&](Event a) { return values[a.bits] == 1; });
  return PureQMeasure{SignedQMeasure::from_coordinates(space, coords), std::move(phi)};
}

RationalMatrix binding_matrix(const SignedQMeasure& m) {
  RationalMatrix rows;
  const auto& space = m.space();
  for (Mask a = 1; a <= space.full_mask(); ++a) {
    const Rational v = m.evaluate(Event{a});
    if (sgn(v) == 0 || v == 1) rows.append_row(event_functional(space, Event{a}));
  }
  return rows;
}

std::vector<Rational> scaled_coordinates(const std::vector<std::int64_t>& y, std::int64_t det) {
  std::vector<Rational> x;
  x.reserve(y.size());
  for (const auto v : y) {
    Rational q(static_cast<long>(v), static_cast<long>(det));
    q.canonicalize();
    x.push_back(std::move(q));
  }
  return x;
}

}  // namespace

PurityCheck check_pure(const SignedQMeasure& m, Exec exec) {
  const std::uint64_t count = m.space().event_count();
  std::optional<std::uint64_t> first;
  if (const auto scaled = detail::ScaledMeasure::make(m)) {
    const detail::i128 one = scaled->denominator.get_si();
    first = find_first(
        count,
        [&](std::uint64_t e) {
          const auto v = scaled->evaluate(static_cast<Mask>(e));
          return v != 0 && v != one;
        },
        exec);
  } else {
    first = find_first(
        count,
        [&](std::uint64_t e) {
          const Rational v = m.evaluate(Event{static_cast<Mask>(e)});
          return sgn(v) != 0 && v != 1;
        },
        exec);
  }
  PurityCheck out;
  if (first) {
    out.pure = false;
    out.witness = Event{static_cast<Mask>(*first)};
    out.witness_value = m.evaluate(*out.witness);
  }
  return out;
}

bool is_pure(const SignedQMeasure& m, Exec exec) { return check_pure(m, exec).pure; }

SignedQMeasure grade2_extension(const Coevent& phi) {
  const auto& space = phi.space();
  const int n = space.size();
  std::vector<Rational> singles(static_cast<std::size_t>(n));
  std::vector<Rational> doubles(pair_count(n));
  for (int i = 0; i < n; ++i) {
    singles[static_cast<std::size_t>(i)] = phi(Event::singleton(i)) ? 1 : 0;
    for (int j = i + 1; j < n; ++j) doubles[pair_index(n, i, j)] = phi(Event::pair(i, j)) ? 1 : 0;
  }
  return SignedQMeasure(space, std::move(singles), std::move(doubles));
}

std::vector<PureQMeasure> enumerate_pure(const OutcomeSpace& space, Exec exec) {
  const int n = space.size();
  if (n > 6) throw ResourceError("pure enumeration capped at n=6");
  const std::size_t width = coordinate_count(n);
  auto hits = filter_indices(
      std::uint64_t{1} << width,
      [&](std::uint64_t t) {
        std::array<int, 64> values{};
        return candidate_values(n, t, values);
      },
      exec);
  std::sort(hits.begin(), hits.end(),
            [&](std::uint64_t a, std::uint64_t b) { return reverse_bits(a, width) < reverse_bits(b, width); });
  std::vector<PureQMeasure> out;
  out.reserve(hits.size());
  for (const auto t : hits) out.push_back(pure_from_candidate(space, t));
  return out;
}

std::vector<Rational> event_functional(const OutcomeSpace& space, Event a) {
  const int n = space.size();
  std::vector<Rational> row(coordinate_count(n));
  const long single = 2 - a.size();
  for (int i = 0; i < n; ++i) {
    if (!a.contains(i)) continue;
    row[static_cast<std::size_t>(i)] = single;
    for (int j = i + 1; j < n; ++j) {
      if (a.contains(j)) row[static_cast<std::size_t>(n) + pair_index(n, i, j)] = 1;
    }
  }
  return row;
}

void require_unit_bounded(const SignedQMeasure& m) {
  const auto flag = is_q_measure(m);
  if (!flag.is_q_measure) {
    throw InputError("not a q-measure: value " + format_rational(flag.witness_value) + " on {" +
                     format_event(*flag.witness) + "}");
  }
  const Rational top = max_value(m);
  if (top > 1) throw InputError("largest event value " + format_rational(top) + " exceeds 1");
}

bool is_extremal(const SignedQMeasure& m) {
  require_unit_bounded(m);
  return rank(binding_matrix(m)) == coordinate_count(m.space().size());
}

std::optional<Perturbation> extremality_perturbation(const SignedQMeasure& m) {
  require_unit_bounded(m);
  const auto& space = m.space();
  const auto rows = binding_matrix(m);
  const std::size_t d = coordinate_count(space.size());
  std::vector<Rational> direction;
  if (rows.rows() == 0) {
    direction.assign(d, Rational(0));
    direction[0] = 1;
  } else {
    const auto rn = rank_and_nullspace(rows);
    if (rn.null_basis.empty()) return std::nullopt;
    direction = rn.null_basis.front();
  }
  const auto eta = SignedQMeasure::from_coordinates(space, direction);
  std::optional<Rational> eps;
  for (Mask a = 1; a <= space.full_mask(); ++a) {
    const Rational e = abs(eta.evaluate(Event{a}));
    if (sgn(e) == 0) continue;
    const Rational v = m.evaluate(Event{a});
    const Rational slack = std::min(v, Rational(1 - v));
    const Rational step = slack / e;
    if (!eps || step < *eps) eps = step;
  }
  if (!eps || sgn(*eps) <= 0) throw DefectError("perturbation direction moves a binding event");
  return Perturbation{eta, *eps};
}

std::vector<SignedQMeasure> vertices_of_M(const OutcomeSpace& space, bool allow_n4, Exec exec) {
  const int n = space.size();
  if (n > 4 || (n == 4 && !allow_n4)) {
    throw ResourceError(n == 4 ? "vertex enumeration at n=4 needs the long-running flag"
                               : "vertex enumeration capped at n=4");
  }
  const auto d = coordinate_count(n);
  const auto events = static_cast<std::size_t>(space.full_mask());
  // Integer functional rows, one per nonempty event.
  std::vector<std::vector<std::int64_t>> functional(events);
  for (std::size_t e = 0; e < events; ++e) {
    for (const auto& v : event_functional(space, Event{static_cast<Mask>(e + 1)})) functional[e].push_back(v.get_num().get_si());
  }
  // Every d-subset of the events, as ascending index lists.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    subsets.push_back(pick);
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == events - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<std::vector<std::vector<Rational>>> found(subsets.size());
  auto visit = [&](std::size_t k) {
    const auto& rows = subsets[k];
    RationalMatrix basis;
    for (const auto r : rows) basis.append_row(event_functional(space, Event{static_cast<Mask>(r + 1)}));
    const Rational det_q = determinant(basis);
    if (sgn(det_q) == 0) return;
    const auto inv = inverse(basis);
    const std::int64_t det = det_q.get_num().get_si();
    // adj = det * B^-1 is integral.
    std::vector<std::int64_t> adj(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Rational v = (*inv)(i, j) * det_q;
        if (v.get_den() != 1) throw DefectError("adjugate entry is not an integer");
        adj[i * d + j] = v.get_num().get_si();
      }
    }
    std::vector<std::int64_t> y(d);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << d); ++c) {
      std::fill(y.begin(), y.end(), 0);
      for (std::uint64_t r = c; r != 0; r &= r - 1) {
        const auto col = static_cast<std::size_t>(std::countr_zero(r));
        for (std::size_t i = 0; i < d; ++i) y[i] += adj[i * d + col];
      }
      bool inside = true;
      for (std::size_t e = 0; e < events && inside; ++e) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < d; ++i) v += functional[e][i] * y[i];
        inside = det > 0 ? (v >= 0 && v <= det) : (v <= 0 && v >= det);
      }
      if (inside) found[k].push_back(scaled_coordinates(y, det));
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < subsets.size(); ++k) visit(k);
  } else {
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < count; ++k) visit(static_cast<std::size_t>(k));
  }

  std::set<std::vector<Rational>> vertices;
  for (auto& list : found) {
    for (auto& v : list) vertices.insert(std::move(v));
  }
  std::vector<SignedQMeasure> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(SignedQMeasure::from_coordinates(space, v));
  return out;
}

NotDecomposable::NotDecomposable(std::string what, std::vector<Rational> cert)
    : InputError(std::move(what)), certificate(std::move(cert)) {}

SignedQMeasure Decomposition::recompose() const {
  auto out = SignedQMeasure::zero(space);
  for (const auto& t : terms) out = out + t.weight * t.component.measure;
  return out;
}

Decomposition decompose(const SignedQMeasure& m) {
  const auto& space = m.space();
  const int n = space.size();
  if (n > 5) throw ResourceError("decomposition capped at n=5");
  const auto flag = is_q_measure(m);
  if (!flag.is_q_measure) {
    throw InputError("not a q-measure: value " + format_rational(flag.witness_value) + " on {" +
                     format_event(*flag.witness) + "}");
  }
  Decomposition out{space, max_value(m), {}};
  if (sgn(out.scale) == 0) return out;

  if (is_pure(m)) {
    out.terms.push_back({Rational(1), PureQMeasure{m, Coevent::from_predicate(space, [&](Event a) {
                                                     return m.evaluate(a) == 1;
                                                   })}});
  } else if (m.is_additive()) {
    for (int i = 0; i < n; ++i) {
      if (sgn(m.single(i)) == 0) continue;
      out.terms.push_back({m.single(i), PureQMeasure{dirac(space, i), evaluation_map(space, i)}});
    }
  } else {
    const auto pure = enumerate_pure(space);
    const std::size_t d = coordinate_count(n);
    RationalMatrix a(d + 1, pure.size());
    for (std::size_t k = 0; k < pure.size(); ++k) {
      const auto coords = pure[k].measure.coordinates();
      for (std::size_t r = 0; r < d; ++r) a(r, k) = coords[r];
      a(d, k) = 1;
    }
    std::vector<Rational> b = (Rational(1) / out.scale * m).coordinates();
    b.emplace_back(1);
    auto result = solve_feasibility(a, b);
    Rational factor = out.scale;
    if (!result.feasible()) {
      // Outside the hull; try the cone on m itself.
      RationalMatrix cone(d, pure.size());
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < pure.size(); ++k) cone(r, k) = a(r, k);
      }
      result = solve_feasibility(cone, m.coordinates());
      if (!result.feasible()) {
        throw NotDecomposable("no nonnegative combination of pure measures reproduces the input",
                              std::move(result.certificate));
      }
      out.convex = false;
      factor = 1;
    }
    for (std::size_t k = 0; k < pure.size(); ++k) {
      if (sgn(result.solution[k]) > 0) out.terms.push_back({factor * result.solution[k], pure[k]});
    }
  }
  if (out.recompose() != m) throw DefectError("decomposition does not reproduce the input");
  return out;
}

}  // namespace qm
