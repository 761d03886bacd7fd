#pragma once

// Integer image of a signed q-measure: every coordinate multiplied by the
// least common denominator. Exhaustive event scans run on this when the
// scaled coordinates are small, and fall back to Rational otherwise.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "int128.hpp"
#include "qm/qmeasure.hpp"

namespace qm::detail {


struct ScaledMeasure {
  int n = 0;
  std::vector<std::int64_t> singles;
  std::vector<std::int64_t> doubles;
  mpz_class denominator;

  static std::optional<ScaledMeasure> make(const SignedQMeasure& m) {
    mpz_class lcm = 1;
    for (const auto& v : m.singles()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& v : m.doubles()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    const mpz_class limit = mpz_class(1) << 40;
    ScaledMeasure s;
    s.n = m.space().size();
    s.denominator = lcm;
    auto scale = [&](const Rational& v, std::vector<std::int64_t>& out) {
      const mpz_class x = v.get_num() * (lcm / v.get_den());
      if (abs(x) >= limit) return false;
      out.push_back(x.get_si());
      return true;
    };
    for (const auto& v : m.singles()) {
      if (!scale(v, s.singles)) return std::nullopt;
    }
    for (const auto& v : m.doubles()) {
      if (!scale(v, s.doubles)) return std::nullopt;
    }
    return s;
  }

  // denominator * mu(A)
  i128 evaluate(Mask a) const {
    const int k = std::popcount(a);
    if (k == 0) return 0;
    if (k == 1) return singles[static_cast<std::size_t>(std::countr_zero(a))];
    i128 pairs = 0;
    i128 single_sum = 0;
    for (Mask x = a; x != 0; x &= x - 1) {
      const int i = std::countr_zero(x);
      single_sum += singles[static_cast<std::size_t>(i)];
      for (Mask y = x & (x - 1); y != 0; y &= y - 1) {
        pairs += doubles[pair_index(n, i, std::countr_zero(y))];
      }
    }
    return pairs - static_cast<i128>(k - 2) * single_sum;
  }
};

}  // namespace qm::detail
