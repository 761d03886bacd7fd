#include "qm/ratlp.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "int128.hpp"
#include "qm/errors.hpp"

namespace qm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InputError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InputError("vector length does not match column count");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) s += (*this)(r, c) * x[c];
    }
    out[r] = s;
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RankNullspace rank_and_nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = reduce(r);
  RankNullspace out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix r = m;
  return reduce(r).size();
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(a(sel, col)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

namespace {

using detail::i128;

struct SparseEntry {
  std::uint32_t row;
  Rational value;
};

struct IntEntry {
  std::uint32_t row;
  std::int64_t value;
};

class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const RationalMatrix& a, std::span<const Rational> b)
      : m_(a.rows()), n_(a.cols()), sign_(m_, 1), columns_(n_), int_columns_(n_) {
    rhs_.assign(b.begin(), b.end());
    for (std::size_t r = 0; r < m_; ++r) {
      if (sgn(rhs_[r]) < 0) {
        sign_[r] = -1;
        rhs_[r] = -rhs_[r];
      }
    }
    const mpz_class int_limit = mpz_class(1) << 31;
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& v = a(r, c);
        if (sgn(v) == 0) continue;
        Rational flipped = sign_[r] < 0 ? Rational(-v) : v;
        if (integral_ && is_integer(flipped) && abs(flipped.get_num()) < int_limit) {
          int_columns_[c].push_back({static_cast<std::uint32_t>(r), flipped.get_num().get_si()});
        } else {
          integral_ = false;
        }
        columns_[c].push_back({static_cast<std::uint32_t>(r), std::move(flipped)});
      }
    }
    binv_.assign(m_ * m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = 1;
    xb_ = rhs_;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    basic_.assign(n_, false);
  }

  FeasibilityResult run() {
    std::vector<Rational> y;
    const std::size_t guard = std::size_t{1} << 40;
    while (true) {
      y = multipliers();
      const auto entering = choose_entering(y);
      if (!entering) break;
      pivot_on(*entering);
      if (++pivots_ > guard) throw DefectError("simplex exceeded pivot guard");
    }
    Rational objective;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) objective += xb_[i];
    }
    FeasibilityResult result;
    result.pivots = pivots_;
    if (sgn(objective) == 0) {
      result.status = FeasibilityStatus::feasible;
      result.solution.assign(n_, Rational(0));
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < n_) result.solution[basis_[i]] = xb_[i];
      }
    } else {
      result.status = FeasibilityStatus::infeasible;
      result.certificate.resize(m_);
      for (std::size_t r = 0; r < m_; ++r) result.certificate[r] = sign_[r] < 0 ? Rational(-y[r]) : y[r];
    }
    return result;
  }

 private:
  // y^T = c_B^T B^{-1}; c is 1 on artificials and 0 on structural columns.
  std::vector<Rational> multipliers() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        const Rational& v = binv_[i * m_ + k];
        if (sgn(v) != 0) y[k] += v;
      }
    }
    return y;
  }

  // Bland: the lowest-index structural column with negative reduced cost
  // -y^T A_j, i.e. y^T A_j > 0.
  std::optional<std::size_t> choose_entering(const std::vector<Rational>& y) const {
    if (integral_) {
      mpz_class lcm_den = 1;
      for (const auto& v : y) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
      std::vector<std::int64_t> scaled(m_);
      bool fits = true;
      for (std::size_t k = 0; k < m_ && fits; ++k) {
        const mpz_class s = y[k].get_num() * (lcm_den / y[k].get_den());
        if (!s.fits_slong_p()) {
          fits = false;
        } else {
          scaled[k] = s.get_si();
        }
      }
      if (fits) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (basic_[j]) continue;
          i128 s = 0;
          for (const auto& e : int_columns_[j]) s += static_cast<i128>(scaled[e.row]) * e.value;
          if (s > 0) return j;
        }
        return std::nullopt;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (basic_[j]) continue;
      Rational s;
      for (const auto& e : columns_[j]) {
        if (sgn(y[e.row]) != 0) s += y[e.row] * e.value;
      }
      if (sgn(s) > 0) return j;
    }
    return std::nullopt;
  }

  void pivot_on(std::size_t j) {
    std::vector<Rational> u(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational s;
      for (const auto& e : columns_[j]) {
        const Rational& v = binv_[i * m_ + e.row];
        if (sgn(v) != 0) s += v * e.value;
      }
      u[i] = std::move(s);
    }
    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sgn(u[i]) <= 0) continue;
      Rational ratio = xb_[i] / u[i];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!leave) throw DefectError("phase-1 simplex found an unbounded direction");
    const std::size_t r = *leave;
    const Rational inv = 1 / u[r];
    for (std::size_t k = 0; k < m_; ++k) {
      Rational& v = binv_[r * m_ + k];
      if (sgn(v) != 0) v *= inv;
    }
    xb_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(u[i]) == 0) continue;
      const Rational& f = u[i];
      for (std::size_t k = 0; k < m_; ++k) {
        const Rational& pv = binv_[r * m_ + k];
        if (sgn(pv) != 0) binv_[i * m_ + k] -= f * pv;
      }
      xb_[i] -= f * xb_[r];
    }
    if (basis_[r] < n_) basic_[basis_[r]] = false;
    basis_[r] = j;
    basic_[j] = true;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<int> sign_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<SparseEntry>> columns_;
  std::vector<std::vector<IntEntry>> int_columns_;
  bool integral_ = true;
  std::vector<Rational> binv_;
  std::vector<Rational> xb_;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_;
  std::size_t pivots_ = 0;
};

void verify(const RationalMatrix& a, std::span<const Rational> b, const FeasibilityResult& result) {
  if (result.feasible()) {
    for (const auto& x : result.solution) {
      if (sgn(x) < 0) throw DefectError("simplex returned a negative component");
    }
    const auto ax = a.multiply(result.solution);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (ax[r] != b[r]) throw DefectError("simplex solution fails substitution in row " + std::to_string(r));
    }
    return;
  }
  const auto& y = result.certificate;
  Rational yb;
  for (std::size_t r = 0; r < a.rows(); ++r) yb += y[r] * b[r];
  if (sgn(yb) <= 0) throw DefectError("infeasibility certificate has y^T b <= 0");
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rational s;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (sgn(a(r, c)) != 0 && sgn(y[r]) != 0) s += y[r] * a(r, c);
    }
    if (sgn(s) > 0) throw DefectError("infeasibility certificate violated at column " + std::to_string(c));
  }
}

}  // namespace

FeasibilityResult solve_feasibility(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) {
    throw InputError("right-hand side has " + std::to_string(b.size()) + " entries but the matrix has " +
                     std::to_string(a.rows()) + " rows");
  }
  if (a.rows() > kMaxLpRows || a.cols() > kMaxLpCols) {
    throw ResourceError("linear system of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " exceeds the " + std::to_string(kMaxLpRows) + "x" + std::to_string(kMaxLpCols) +
                        " cap");
  }
  PhaseOneSimplex simplex(a, b);
  FeasibilityResult result = simplex.run();
  verify(a, b, result);
  return result;
}

}  // namespace qm
