#include <random>

#include "doctest.h"
#include "qm/errors.hpp"
#include "qm/ratlp.hpp"

using namespace qm;

namespace {

RationalMatrix from_rows(std::vector<std::vector<Rational>> rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

bool farkas_holds(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  Rational yb;
  for (std::size_t r = 0; r < a.rows(); ++r) yb += y[r] * b[r];
  if (sgn(yb) <= 0) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rational s;
    for (std::size_t r = 0; r < a.rows(); ++r) s += y[r] * a(r, c);
    if (sgn(s) > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank and null space") {
  auto id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rank_and_nullspace(id);
  CHECK(r.rank == 3);
  CHECK(r.null_basis.empty());

  auto row = from_rows({{1, -1}});
  r = rank_and_nullspace(row);
  CHECK(r.rank == 1);
  REQUIRE(r.null_basis.size() == 1);
  CHECK(r.null_basis[0][0] == r.null_basis[0][1]);
  CHECK(sgn(r.null_basis[0][0]) != 0);
}

TEST_CASE("rank + nullity = cols and M v = 0 on random integer matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = 1 + (trial / 5) % 6;
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(rng);
    }
    const auto r = rank_and_nullspace(m);
    CHECK(r.rank + r.null_basis.size() == cols);
    for (const auto& v : r.null_basis) {
      for (const auto& x : m.multiply(v)) CHECK(sgn(x) == 0);
    }
  }
}

TEST_CASE("inverse and determinant") {
  auto m = from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(m) == 1);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)(0, 0) == 1);
  CHECK((*inv)(0, 1) == -1);
  CHECK((*inv)(1, 1) == 2);
  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("sign obstruction is infeasible with certificate -1") {
  const auto a = from_rows({{1}});
  const std::vector<Rational> b{-1};
  const auto r = solve_feasibility(a, b);
  CHECK_FALSE(r.feasible());
  REQUIRE(r.certificate.size() == 1);
  CHECK(sgn(r.certificate[0]) < 0);
  CHECK(farkas_holds(a, b, r.certificate));
}

TEST_CASE("dimension mismatch and caps") {
  const auto a = from_rows({{1, 2}});
  const std::vector<Rational> b{1, 2};
  CHECK_THROWS_AS(solve_feasibility(a, b), InputError);
  RationalMatrix big(kMaxLpRows + 1, 1);
  std::vector<Rational> bb(kMaxLpRows + 1);
  CHECK_THROWS_AS(solve_feasibility(big, bb), ResourceError);
}

TEST_CASE("random systems: feasible answers substitute, infeasible ones carry Farkas certificates") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 7;
    RationalMatrix a(rows, cols);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = pick(rng);
      b[i] = pick(rng);
    }
    const auto r = solve_feasibility(a, b);
    if (r.feasible()) {
      ++feasible;
      CHECK(a.multiply(r.solution) == b);
      std::size_t nonzero = 0;
      for (const auto& x : r.solution) {
        CHECK(sgn(x) >= 0);
        nonzero += sgn(x) != 0;
      }
      CHECK(nonzero <= rank(a));
    } else {
      ++infeasible;
      CHECK(farkas_holds(a, b, r.certificate));
    }
    // Deterministic.
    const auto again = solve_feasibility(a, b);
    CHECK(again.solution == r.solution);
    CHECK(again.certificate == r.certificate);
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("redundant equality rows are handled") {
  const auto a = from_rows({{1, 1}, {2, 2}, {1, 1}});
  const std::vector<Rational> b{1, 2, 1};
  const auto r = solve_feasibility(a, b);
  REQUIRE(r.feasible());
  CHECK(a.multiply(r.solution) == b);
}
