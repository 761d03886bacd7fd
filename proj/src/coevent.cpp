#include "qm/coevent.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>

#include "qm/errors.hpp"

namespace qm {
namespace {

constexpr std::uint64_t kLow[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

constexpr std::size_t kMaterializeBudget = std::size_t{512} << 20;

std::uint64_t tail_mask(int n) { return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1; }

void check_table(std::span<const std::uint64_t> words, int n, const char* what) {
  if (words.size() != table_words(n)) throw InputError(std::string(what) + " has the wrong number of words");
  if ((words[0] & 1U) != 0) throw InputError(std::string(what) + " is nonzero on the empty event");
  if ((words.back() & ~tail_mask(n)) != 0) throw InputError(std::string(what) + " has bits beyond 2^n");
}

int check_coevent_n(int n, int cap, const char* what) {
  if (n > cap) throw ResourceError(std::string(what) + " is capped at n=" + std::to_string(cap));
  return n;
}

}  // namespace

std::size_t table_words(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

void moebius_gf2(std::span<std::uint64_t> words, int n) {
  for (int i = 0; i < std::min(n, 6); ++i) {
    const unsigned shift = 1U << i;
    for (auto& w : words) w ^= (w & kLow[i]) << shift;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if ((j & stride) == 0) words[j + stride] ^= words[j];
    }
  }
}

Coevent::Coevent(OutcomeSpace space, std::vector<std::uint64_t> truth, std::vector<std::uint64_t> anf)
    : space_(space) {
  if (space_.size() <= 6) {
    small_truth_ = truth[0];
    small_anf_ = anf[0];
  } else {
    truth_ = std::move(truth);
    anf_ = std::move(anf);
  }
}

std::span<const std::uint64_t> Coevent::truth() const noexcept {
  if (space_.size() <= 6) return {&small_truth_, 1};
  return truth_;
}

std::span<const std::uint64_t> Coevent::anf() const noexcept {
  if (space_.size() <= 6) return {&small_anf_, 1};
  return anf_;
}

Coevent Coevent::zero(OutcomeSpace space) {
  const std::size_t w = table_words(space.size());
  return Coevent(space, std::vector<std::uint64_t>(w), std::vector<std::uint64_t>(w));
}

Coevent Coevent::from_truth_bits(OutcomeSpace space, std::span<const std::uint64_t> words) {
  check_table(words, space.size(), "truth table");
  std::vector<std::uint64_t> truth(words.begin(), words.end());
  std::vector<std::uint64_t> anf = truth;
  moebius_gf2(anf, space.size());
  return Coevent(space, std::move(truth), std::move(anf));
}

Coevent Coevent::from_anf_bits(OutcomeSpace space, std::span<const std::uint64_t> words) {
  check_table(words, space.size(), "normal form");
  std::vector<std::uint64_t> anf(words.begin(), words.end());
  std::vector<std::uint64_t> truth = anf;
  moebius_gf2(truth, space.size());
  return Coevent(space, std::move(truth), std::move(anf));
}

Coevent Coevent::from_polynomial(OutcomeSpace space, const PolynomialForm& p) {
  std::vector<std::uint64_t> anf(table_words(space.size()));
  for (const Event s : p.monomials) {
    if (s.empty()) throw InputError("the empty monomial would make the coevent nonzero on the empty event");
    if (!space.contains(s)) throw InputError("monomial {" + format_event(s) + "} outside the outcome space");
    auto& w = anf[s.bits >> 6];
    const std::uint64_t b = std::uint64_t{1} << (s.bits & 63U);
    if ((w & b) != 0) throw InputError("monomial {" + format_event(s) + "} listed twice");
    w |= b;
  }
  return from_anf_bits(space, anf);
}

Coevent Coevent::from_predicate(OutcomeSpace space, const std::function<bool(Event)>& phi) {
  std::vector<std::uint64_t> truth(table_words(space.size()));
  for (std::uint64_t a = 1; a < space.event_count(); ++a) {
    if (phi(Event{static_cast<Mask>(a)})) truth[a >> 6] |= std::uint64_t{1} << (a & 63U);
  }
  return from_truth_bits(space, truth);
}

PolynomialForm Coevent::polynomial() const {
  PolynomialForm p;
  const auto words = anf();
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::uint64_t w = words[j]; w != 0; w &= w - 1) {
      p.monomials.emplace_back(static_cast<Mask>(j * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return p;
}

std::size_t Coevent::monomial_count() const {
  std::size_t c = 0;
  for (const auto w : anf()) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

int Coevent::degree() const {
  int d = -1;
  const auto words = anf();
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::uint64_t w = words[j]; w != 0; w &= w - 1) {
      d = std::max(d, std::popcount(static_cast<Mask>(j * 64 + static_cast<std::size_t>(std::countr_zero(w)))));
    }
  }
  return d;
}

bool Coevent::is_zero() const {
  return std::all_of(anf().begin(), anf().end(), [](std::uint64_t w) { return w == 0; });
}

Coevent operator^(const Coevent& a, const Coevent& b) {
  if (!(a.space_ == b.space_)) throw InputError("coevents live on different outcome spaces");
  const auto ta = a.truth();
  const auto tb = b.truth();
  const auto na = a.anf();
  const auto nb = b.anf();
  std::vector<std::uint64_t> truth(ta.size());
  std::vector<std::uint64_t> anf(ta.size());
  for (std::size_t j = 0; j < ta.size(); ++j) {
    truth[j] = ta[j] ^ tb[j];
    anf[j] = na[j] ^ nb[j];
  }
  return Coevent(a.space_, std::move(truth), std::move(anf));
}

Coevent operator*(const Coevent& a, const Coevent& b) {
  if (!(a.space_ == b.space_)) throw InputError("coevents live on different outcome spaces");
  const auto ta = a.truth();
  const auto tb = b.truth();
  std::vector<std::uint64_t> truth(ta.size());
  for (std::size_t j = 0; j < ta.size(); ++j) truth[j] = ta[j] & tb[j];
  return Coevent::from_truth_bits(a.space_, truth);
}

bool operator==(const Coevent& a, const Coevent& b) {
  return a.space_ == b.space_ && std::ranges::equal(a.anf(), b.anf());
}

std::strong_ordering operator<=>(const Coevent& a, const Coevent& b) {
  if (auto c = a.space_.size() <=> b.space_.size(); c != 0) return c;
  const auto x = a.anf();
  const auto y = b.anf();
  for (std::size_t j = x.size(); j-- > 0;) {
    if (auto c = x[j] <=> y[j]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Coevent evaluation_map(const OutcomeSpace& space, int i) {
  if (i < 0 || i >= space.size()) throw InputError("outcome " + std::to_string(i + 1) + " outside 1.." + std::to_string(space.size()));
  return Coevent::from_polynomial(space, PolynomialForm{{Event::singleton(i)}});
}

CoeventClass classify(const Coevent& phi) {
  check_coevent_n(phi.space().size(), 12, "classification");
  CoeventClass c;
  const int deg = phi.degree();
  c.zero = deg < 0;
  c.unital = phi(phi.space().full());
  c.additive = deg <= 1;
  c.multiplicative = phi.monomial_count() <= 1;
  c.quadratic = deg <= 2;
  c.homomorphism = c.unital && c.additive && c.multiplicative;
  return c;
}

CoeventClass classify_by_definition(const Coevent& phi) {
  const auto& space = phi.space();
  check_coevent_n(space.size(), 8, "definitional classification");
  const Mask full = space.full_mask();
  CoeventClass c;
  c.zero = true;
  for (Mask a = 1; a <= full; ++a) c.zero = c.zero && !phi(Event{a});
  c.unital = phi(space.full());
  c.additive = true;
  c.multiplicative = true;
  c.quadratic = true;
  auto at = [&](Mask m) { return phi(Event{m}); };
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b) {
      if (at(a & b) != (at(a) && at(b))) c.multiplicative = false;
      if ((a & b) != 0) continue;
      if (at(a | b) != (at(a) != at(b))) c.additive = false;
      const Mask rest = full & ~(a | b);
      for (Mask x = rest;; x = (x - 1) & rest) {
        const bool rhs = at(a | b) ^ at(a | x) ^ at(b | x) ^ at(a) ^ at(b) ^ at(x);
        if (at(a | b | x) != rhs) c.quadratic = false;
        if (x == 0) break;
      }
    }
  }
  c.homomorphism = c.unital && c.additive && c.multiplicative;
  return c;
}

std::vector<Coevent> enumerate_logic(const OutcomeSpace& space, LogicKind kind) {
  const int n = space.size();
  switch (kind) {
    case LogicKind::full: check_coevent_n(n, 4, "full logic enumeration"); break;
    case LogicKind::quadratic: check_coevent_n(n, 6, "quadratic logic enumeration"); break;
    default: check_coevent_n(n, 20, std::string(to_string(kind)).append(" logic enumeration").c_str()); break;
  }
  const std::size_t words = table_words(n);
  std::vector<Mask> positions;  // monomials that may appear, ascending
  switch (kind) {
    case LogicKind::full:
      for (Mask s = 1; s <= space.full_mask(); ++s) positions.push_back(s);
      break;
    case LogicKind::additive:
      for (int i = 0; i < n; ++i) positions.push_back(Mask{1} << i);
      break;
    case LogicKind::quadratic:
      for (Mask s = 1; s <= space.full_mask(); ++s) {
        if (std::popcount(s) <= 2) positions.push_back(s);
      }
      break;
    case LogicKind::multiplicative:
      break;
  }
  const std::uint64_t count = kind == LogicKind::multiplicative ? std::uint64_t{1} << n
                                                                : std::uint64_t{1} << positions.size();
  const std::size_t per = sizeof(Coevent) + (n <= 6 ? 0 : 2 * words * sizeof(std::uint64_t));
  if (count > kMaterializeBudget / per) {
    throw ResourceError("materializing " + std::to_string(count) + " coevents exceeds the memory budget");
  }
  std::vector<Coevent> out;
  out.reserve(count);
  std::vector<std::uint64_t> anf(words);
  if (kind == LogicKind::multiplicative) {
    out.push_back(Coevent::zero(space));
    for (Mask s = 1; s <= space.full_mask(); ++s) {
      std::fill(anf.begin(), anf.end(), 0);
      anf[s >> 6] = std::uint64_t{1} << (s & 63U);
      out.push_back(Coevent::from_anf_bits(space, anf));
    }
    return out;
  }
  for (std::uint64_t t = 0; t < count; ++t) {
    std::fill(anf.begin(), anf.end(), 0);
    for (std::uint64_t r = t; r != 0; r &= r - 1) {
      const Mask s = positions[static_cast<std::size_t>(std::countr_zero(r))];
      anf[s >> 6] |= std::uint64_t{1} << (s & 63U);
    }
    out.push_back(Coevent::from_anf_bits(space, anf));
  }
  return out;
}

std::string logic_size(int n, LogicKind kind) {
  if (n < 1 || n > kMaxOutcomes) throw InputError("n must lie in 1..24");
  mpz_class v = 1;
  switch (kind) {
    case LogicKind::full: mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), (1UL << n) - 1); break;
    case LogicKind::additive:
    case LogicKind::multiplicative: mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)); break;
    case LogicKind::quadratic:
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n * (n + 1) / 2));
      break;
  }
  return v.get_str();
}

const char* to_string(LogicKind kind) {
  switch (kind) {
    case LogicKind::full: return "full";
    case LogicKind::additive: return "additive";
    case LogicKind::multiplicative: return "multiplicative";
    case LogicKind::quadratic: return "quadratic";
  }
  return "?";
}

LogicKind parse_logic_kind(std::string_view text) {
  if (text == "full") return LogicKind::full;
  if (text == "additive") return LogicKind::additive;
  if (text == "multiplicative") return LogicKind::multiplicative;
  if (text == "quadratic") return LogicKind::quadratic;
  throw InputError("unknown logic kind '" + std::string(text) + "'");
}

}  // namespace qm
