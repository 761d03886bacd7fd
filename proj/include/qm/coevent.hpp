#pragma once

// Coevents: truth functions on the event algebra that vanish on the empty
// event. Each coevent keeps its truth table and its algebraic normal form
// (the GF(2) polynomial in the evaluation maps) side by side.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qm/space.hpp"

namespace qm {

// phi = XOR over S in monomials of prod_{i in S} w_i*. Sorted by mask,
// distinct and nonempty; no monomials means the zero coevent.
struct PolynomialForm {
  std::vector<Event> monomials;

  friend bool operator==(const PolynomialForm&, const PolynomialForm&) = default;
};

struct CoeventClass {
  bool zero = false;
  bool unital = false;          // phi(Omega) = 1
  bool additive = false;        // phi(A u B) = phi(A) + phi(B) on disjoint A, B
  bool multiplicative = false;  // phi(A n B) = phi(A) phi(B)
  bool quadratic = false;       // grade-2 identity mod 2 on disjoint triples
  bool homomorphism = false;

  friend bool operator==(const CoeventClass&, const CoeventClass&) = default;
};

class Coevent {
 public:
  static Coevent zero(OutcomeSpace space);
  // Bit A of the table is phi(A). Throws InputError if bit 0 is set or a
  // bit beyond 2^n is set.
  static Coevent from_truth_bits(OutcomeSpace space, std::span<const std::uint64_t> words);
  // Bit S of the table is the coefficient of the monomial S.
  static Coevent from_anf_bits(OutcomeSpace space, std::span<const std::uint64_t> words);
  static Coevent from_polynomial(OutcomeSpace space, const PolynomialForm& p);
  static Coevent from_predicate(OutcomeSpace space, const std::function<bool(Event)>& phi);

  const OutcomeSpace& space() const noexcept { return space_; }
  bool operator()(Event a) const { return bit(truth(), a.bits); }
  bool coefficient(Event s) const { return bit(anf(), s.bits); }

  std::span<const std::uint64_t> truth() const noexcept;
  std::span<const std::uint64_t> anf() const noexcept;

  PolynomialForm polynomial() const;
  std::size_t monomial_count() const;
  int degree() const;  // -1 for the zero coevent
  bool is_zero() const;

  friend Coevent operator^(const Coevent& a, const Coevent& b);
  friend Coevent operator*(const Coevent& a, const Coevent& b);
  friend bool operator==(const Coevent& a, const Coevent& b);
  // Orders by the normal form read as a binary number (monomial mask S is bit S).
  friend std::strong_ordering operator<=>(const Coevent& a, const Coevent& b);

 private:
  Coevent(OutcomeSpace space, std::vector<std::uint64_t> truth, std::vector<std::uint64_t> anf);
  static bool bit(std::span<const std::uint64_t> w, Mask i) { return (w[i >> 6] >> (i & 63U)) & 1U; }

  OutcomeSpace space_;
  // Spaces with n <= 6 fit in one word and keep it inline.
  std::uint64_t small_truth_ = 0;
  std::uint64_t small_anf_ = 0;
  std::vector<std::uint64_t> truth_;
  std::vector<std::uint64_t> anf_;
};

// Number of 64-bit words holding a 2^n-bit table.
std::size_t table_words(int n);

// In-place GF(2) Moebius transform over the subset lattice; its own inverse.
void moebius_gf2(std::span<std::uint64_t> words, int n);

// w_i*(A) = [w_i in A], 0-based i.
Coevent evaluation_map(const OutcomeSpace& space, int i);

// Structural classification from the normal form. Requires n <= 12.
CoeventClass classify(const Coevent& phi);
// The same flags from the defining identities, by exhaustive search. Requires n <= 8.
CoeventClass classify_by_definition(const Coevent& phi);

enum class LogicKind { full, additive, multiplicative, quadratic };

// Ascending in the order of operator<=>. Caps: full n <= 4, quadratic n <= 6,
// additive and multiplicative n <= 20 (and a materialization budget).
std::vector<Coevent> enumerate_logic(const OutcomeSpace& space, LogicKind kind);

// Size of the logic: 2^(2^n - 1), 2^n, 2^n, 2^(n(n+1)/2), as a decimal string.
std::string logic_size(int n, LogicKind kind);

const char* to_string(LogicKind kind);
LogicKind parse_logic_kind(std::string_view text);

}  // namespace qm
