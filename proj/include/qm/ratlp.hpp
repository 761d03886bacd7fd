#pragma once

// Exact rational linear algebra and phase-1 linear feasibility.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Rational> values);

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> null_basis;  // each v satisfies M v = 0
};

RankNullspace rank_and_nullspace(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

enum class FeasibilityStatus { feasible, infeasible };

// Outcome of deciding { x : A x = b, x >= 0 }.
//   feasible:   A solution == b, solution >= 0, basic (at most rank(A) nonzeros).
//   infeasible: certificate y with y^T A <= 0 componentwise and y^T b > 0.
struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  std::vector<Rational> solution;
  std::vector<Rational> certificate;
  std::size_t pivots = 0;

  bool feasible() const noexcept { return status == FeasibilityStatus::feasible; }
};

inline constexpr std::size_t kMaxLpRows = std::size_t{1} << 10;
inline constexpr std::size_t kMaxLpCols = std::size_t{1} << 16;

// Phase-1 revised simplex with Bland's rule. Every answer is checked by
// substitution before it is returned; a failed check raises DefectError.
FeasibilityResult solve_feasibility(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace qm
