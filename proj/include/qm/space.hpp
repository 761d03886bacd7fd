#pragma once

// Finite outcome spaces and their events.
//
// Outcomes are 0-indexed in the C++ API (bit i of an event mask is outcome i)
// and 1-indexed in every text and JSON format, so "1,3" is the mask 0b101.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

using Mask = std::uint32_t;

inline constexpr int kMaxOutcomes = 24;

struct Event {
  Mask bits = 0;

  constexpr Event() = default;
  constexpr explicit Event(Mask b) : bits(b) {}

  static constexpr Event singleton(int i) { return Event{Mask{1} << i}; }
  static constexpr Event pair(int i, int j) { return Event{(Mask{1} << i) | (Mask{1} << j)}; }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1U; }
  constexpr bool is_subset_of(Event other) const { return (bits & ~other.bits) == 0; }
  constexpr bool disjoint_from(Event other) const { return (bits & other.bits) == 0; }

  // Ascending 0-based outcome indices.
  std::vector<int> outcomes() const;

  friend constexpr Event operator|(Event a, Event b) { return Event{a.bits | b.bits}; }
  friend constexpr Event operator&(Event a, Event b) { return Event{a.bits & b.bits}; }
  friend constexpr Event operator-(Event a, Event b) { return Event{a.bits & ~b.bits}; }
  friend constexpr bool operator==(Event, Event) = default;
  friend constexpr std::strong_ordering operator<=>(Event a, Event b) { return a.bits <=> b.bits; }
};

class OutcomeSpace {
 public:
  // Throws InputError unless 1 <= n <= kMaxOutcomes.
  explicit OutcomeSpace(int n);

  int size() const noexcept { return n_; }
  Mask full_mask() const noexcept { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Event full() const noexcept { return Event{full_mask()}; }
  std::uint64_t event_count() const noexcept { return std::uint64_t{1} << n_; }
  bool contains(Event e) const noexcept { return (e.bits & ~full_mask()) == 0; }
  Event complement(Event e) const noexcept { return Event{~e.bits & full_mask()}; }

  friend bool operator==(const OutcomeSpace&, const OutcomeSpace&) = default;

 private:
  int n_;
};

// "1,3" -> {w1, w3}. Empty text is the empty event; duplicates collapse.
Event parse_event(std::string_view text, const OutcomeSpace& space);

// Sorted, 1-based, comma separated; the empty event formats as "".
std::string format_event(Event e);

// All 2^n (or 2^n - 1) events in ascending mask order.
std::vector<Event> enumerate_events(const OutcomeSpace& space, bool nonempty_only);

// A rational-valued function on the outcomes of a space.
class OutcomeFunction {
 public:
  OutcomeFunction(OutcomeSpace space, std::vector<Rational> values);

  const OutcomeSpace& space() const noexcept { return space_; }
  const Rational& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const OutcomeFunction&, const OutcomeFunction&) = default;

 private:
  OutcomeSpace space_;
  std::vector<Rational> values_;
};

// Comma-separated rationals aligned with outcome order, e.g. "1,-1/2,3".
OutcomeFunction parse_outcome_function(std::string_view text, const OutcomeSpace& space);

}  // namespace qm
