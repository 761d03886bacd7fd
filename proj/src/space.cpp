#include "qm/space.hpp"

#include <charconv>
#include <string>

#include "qm/errors.hpp"

namespace qm {
namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<int> Event::outcomes() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

OutcomeSpace::OutcomeSpace(int n) : n_(n) {
  if (n < 1 || n > kMaxOutcomes) {
    throw InputError("outcome count " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxOutcomes));
  }
}

Event parse_event(std::string_view text, const OutcomeSpace& space) {
  text = trim(text);
  Event e;
  if (text.empty()) return e;
  for (std::string_view part : split_commas(text)) {
    part = trim(part);
    long index = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), index);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InputError("malformed outcome index '" + std::string(part) + "'");
    }
    if (index < 1) throw InputError("outcome " + std::to_string(index) + " is not a positive index");
    if (index > space.size()) {
      throw InputError("outcome " + std::to_string(index) + " exceeds n=" +
                       std::to_string(space.size()));
    }
    e.bits |= Mask{1} << (index - 1);
  }
  return e;
}

std::string format_event(Event e) {
  std::string out;
  for (int i : e.outcomes()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

std::vector<Event> enumerate_events(const OutcomeSpace& space, bool nonempty_only) {
  std::vector<Event> events;
  const std::uint64_t count = space.event_count();
  events.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t m = nonempty_only ? 1 : 0; m < count; ++m) events.emplace_back(static_cast<Mask>(m));
  return events;
}

OutcomeFunction::OutcomeFunction(OutcomeSpace space, std::vector<Rational> values)
    : space_(space), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(space_.size())) {
    throw InputError("function has " + std::to_string(values_.size()) + " values but n=" +
                     std::to_string(space_.size()));
  }
}

OutcomeFunction parse_outcome_function(std::string_view text, const OutcomeSpace& space) {
  std::vector<Rational> values;
  for (std::string_view part : split_commas(text)) values.push_back(parse_rational(part));
  return OutcomeFunction(space, std::move(values));
}

}  // namespace qm
