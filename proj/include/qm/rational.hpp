#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qm {

// Exact scalar used everywhere outside the floating-point quadrature code.
// gmpxx keeps every arithmetic result in canonical form.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q", "-p/q" with q > 0. Leading '+' and surrounding
// whitespace are tolerated. Throws InputError otherwise.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace qm
