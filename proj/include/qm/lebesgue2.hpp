#pragma once

// The squared-length q-measure mu(A) = (length of A)^2 on [0,1] and the
// q-integral of real functions with respect to it, evaluated either through
// monotone closed forms or by 2-D midpoint quadrature of min(f(x), f(y)).

#include <functional>
#include <string>
#include <vector>

#include "qm/parallel.hpp"

namespace qm::leb2 {

struct Interval {
  double a;
  double b;

  // Throws InputError unless 0 <= a < b <= 1.
  static Interval unit(double a, double b);
};

enum class Monotonicity { increasing, decreasing, general };

struct Integrand {
  std::function<double(double)> eval;
  Monotonicity tag = Monotonicity::general;
  std::string name;
};

struct QuadratureConfig {
  int grid = 2048;  // panels per axis, >= 16
};

// (b - a)^2
double l2_measure(const Interval& iv);

struct MonotoneResult {
  double value = 0.0;
  bool tag_violated = false;  // a 64-point sample contradicted the tag
};

// Increasing: 2 * int_a^b f(x)(b - x) dx. Decreasing: 2 * int_a^b f(x)(x - a) dx.
// Composite midpoint with cfg.grid panels. Throws InputError for a general tag.
MonotoneResult integrate_monotone(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg);

// Midpoint rule for int_a^b int_a^b min(f(x), f(y)) dy dx on a grid x grid mesh.
// Rows are evaluated independently and reduced pairwise, so the result is the
// same bits for both exec modes.
double integrate_general(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg,
                         Exec exec = Exec::parallel);

enum class ClosedFormKind { power, exp, inverse_power };

// Exact monotone values. Endpoints only need 0 <= a < b (and a > 0 with
// n >= 3 for inverse_power); they are not restricted to [0,1].
double closed_form(ClosedFormKind kind, int n, double a, double b);

Integrand power(int n);
Integrand exponential();
Integrand inverse_power(int n);
Integrand constant(double c);
Integrand abs_shift(double c);  // |x - c|
// sum_k coeffs[k] x^k; tagged general.
Integrand polynomial(std::vector<double> coeffs);

}  // namespace qm::leb2
