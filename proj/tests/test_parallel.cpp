#include <omp.h>

#include <cmath>

#include "doctest.h"
#include "qm/classical.hpp"
#include "qm/extremal.hpp"
#include "qm/lebesgue2.hpp"
#include "qm/parallel.hpp"
#include "qm/sampling.hpp"
#include "test_helpers.hpp"

using namespace qm;
using namespace qm::testing;

TEST_CASE("find_first returns the smallest match for any thread count") {
  for (int threads : {1, 2, 4, 8}) {
    omp_set_num_threads(threads);
    for (std::uint64_t target : {0ULL, 1ULL, 255ULL, 256ULL, 9999ULL}) {
      auto pred = [target](std::uint64_t i) { return i >= target && i % 3 == target % 3; };
      CHECK(find_first(10000, pred, Exec::parallel) == find_first(10000, pred, Exec::serial));
    }
    CHECK_FALSE(find_first(1000, [](std::uint64_t) { return false; }, Exec::parallel).has_value());
  }
}

TEST_CASE("filter_indices keeps ascending order") {
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    auto pred = [](std::uint64_t i) { return (i * 2654435761ULL) % 7 == 0; };
    CHECK(filter_indices(5000, pred, Exec::parallel) == filter_indices(5000, pred, Exec::serial));
    CHECK(filter_indices(0, pred, Exec::parallel).empty());
  }
}

TEST_CASE("pairwise_sum has a fixed topology") {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(1.0 / (i + 1));
  const double a = pairwise_sum(v);
  CHECK(a == pairwise_sum(v));
  CHECK(a == doctest::Approx(7.485470860550345).epsilon(1e-14));
  CHECK(pairwise_sum({}) == 0.0);
}

TEST_CASE("row_values is exec-independent") {
  auto row = [](std::size_t i) { return std::sin(static_cast<double>(i)); };
  CHECK(row_values(777, row, Exec::parallel) == row_values(777, row, Exec::serial));
}

TEST_CASE("kernels agree between serial and parallel paths") {
  MeasureSampler rs(131);
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    for (int n = 3; n <= 12; n += 3) {
      const OutcomeSpace s(n);
      const auto m = random_signed(rs, s);
      const auto a = is_q_measure(m, Exec::serial);
      const auto b = is_q_measure(m, Exec::parallel);
      CHECK(a.is_q_measure == b.is_q_measure);
      CHECK(a.witness == b.witness);
      CHECK(a.witness_value == b.witness_value);
      const auto pa = check_pure(m, Exec::serial);
      const auto pb = check_pure(m, Exec::parallel);
      CHECK(pa.witness == pb.witness);
    }
    const auto iv = leb2::Interval::unit(0, 1);
    CHECK(leb2::integrate_general(leb2::exponential(), iv, {512}, Exec::serial) ==
          leb2::integrate_general(leb2::exponential(), iv, {512}, Exec::parallel));
    const auto phi = Coevent::from_polynomial(OutcomeSpace(8), PolynomialForm{{Event{3}, Event{12}, Event{192}}});
    CHECK(phi_center(phi, Exec::serial) == phi_center(phi, Exec::parallel));
    CHECK(classical_domains(Coevent::from_polynomial(OutcomeSpace(4), PolynomialForm{{Event{1}, Event{6}}}), Exec::serial) ==
          classical_domains(Coevent::from_polynomial(OutcomeSpace(4), PolynomialForm{{Event{1}, Event{6}}}), Exec::parallel));
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("large-n scan") {
  // 2^20 events; all singles 1 and pairs 2 make every value |A|.
  const OutcomeSpace s(20);
  std::vector<Rational> singles(20, Rational(1)), doubles(pair_count(20), Rational(2));
  const SignedQMeasure m(s, singles, doubles);
  CHECK(is_q_measure(m).is_q_measure);
  doubles[pair_index(20, 18, 19)] = 1;
  const SignedQMeasure bad(s, singles, doubles);
  const auto f = is_q_measure(bad, Exec::parallel);
  CHECK(f.is_q_measure);  // |A| - 1 still >= 0
  doubles[pair_index(20, 18, 19)] = -1;
  const auto g = is_q_measure(SignedQMeasure(s, singles, doubles), Exec::parallel);
  CHECK_FALSE(g.is_q_measure);
  CHECK(*g.witness == Event::pair(18, 19));
}
