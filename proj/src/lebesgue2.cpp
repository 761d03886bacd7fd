#include "qm/lebesgue2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qm/errors.hpp"

namespace qm::leb2 {
namespace {

void check_config(const QuadratureConfig& cfg) {
  if (cfg.grid < 16) throw InputError("grid must be at least 16, got " + std::to_string(cfg.grid));
  if (cfg.grid > (1 << 16)) throw ResourceError("grid is capped at 65536 panels per axis");
}

bool contradicts(const Integrand& f, const Interval& iv) {
  constexpr int kSamples = 64;
  double prev = f.eval(iv.a);
  for (int k = 1; k < kSamples; ++k) {
    const double x = iv.a + (iv.b - iv.a) * k / (kSamples - 1);
    const double cur = f.eval(x);
    const double slack = 1e-12 * std::max(1.0, std::abs(prev));
    if (f.tag == Monotonicity::increasing && cur < prev - slack) return true;
    if (f.tag == Monotonicity::decreasing && cur > prev + slack) return true;
    prev = cur;
  }
  return false;
}

}  // namespace

Interval Interval::unit(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b > 1.0 || !(a < b)) {
    throw InputError("interval must satisfy 0 <= a < b <= 1");
  }
  return Interval{a, b};
}

double l2_measure(const Interval& iv) { return (iv.b - iv.a) * (iv.b - iv.a); }

MonotoneResult integrate_monotone(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg) {
  check_config(cfg);
  if (f.tag == Monotonicity::general) {
    throw InputError("integrand is not tagged monotone; use the general quadrature");
  }
  const double h = (iv.b - iv.a) / cfg.grid;
  std::vector<double> terms(static_cast<std::size_t>(cfg.grid));
  for (int k = 0; k < cfg.grid; ++k) {
    const double x = iv.a + (k + 0.5) * h;
    const double weight = f.tag == Monotonicity::increasing ? iv.b - x : x - iv.a;
    terms[static_cast<std::size_t>(k)] = f.eval(x) * weight;
  }
  return MonotoneResult{2.0 * h * pairwise_sum(terms), contradicts(f, iv)};
}

double integrate_general(const Integrand& f, const Interval& iv, const QuadratureConfig& cfg, Exec exec) {
  check_config(cfg);
  const auto n = static_cast<std::size_t>(cfg.grid);
  const double h = (iv.b - iv.a) / cfg.grid;
  std::vector<double> samples(n);
  for (std::size_t k = 0; k < n; ++k) samples[k] = f.eval(iv.a + (static_cast<double>(k) + 0.5) * h);
  const auto rows = row_values(
      n,
      [&](std::size_t i) {
        std::vector<double> row(n);
        const double fi = samples[i];
        for (std::size_t j = 0; j < n; ++j) row[j] = std::min(fi, samples[j]);
        return pairwise_sum(row);
      },
      exec);
  return pairwise_sum(rows) * h * h;
}

double closed_form(ClosedFormKind kind, int n, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || !(a < b)) {
    throw InputError("closed form needs 0 <= a < b");
  }
  switch (kind) {
    case ClosedFormKind::power: {
      if (n < 0) throw InputError("power exponent must be >= 0");
      const double c = 2.0 / ((n + 1.0) * (n + 2.0));
      return c * (std::pow(b, n + 2) - std::pow(a, n + 1) * ((n + 2.0) * b - (n + 1.0) * a));
    }
    case ClosedFormKind::exp:
      return 2.0 * std::exp(b) - 2.0 * std::exp(a) * (b - a + 1.0);
    case ClosedFormKind::inverse_power: {
      if (n < 3) throw InputError("inverse power exponent must be >= 3");
      if (!(a > 0.0)) throw InputError("inverse power needs a > 0");
      const double c = 2.0 / ((n - 1.0) * (n - 2.0));
      return c * (std::pow(b, -n + 1) * ((n - 2.0) * a - (n - 1.0) * b) + std::pow(a, -n + 2));
    }
  }
  throw DefectError("unknown closed-form kind");
}

Integrand power(int n) {
  if (n < 0) throw InputError("power exponent must be >= 0");
  return {[n](double x) { return std::pow(x, n); }, Monotonicity::increasing, "x^" + std::to_string(n)};
}

Integrand exponential() { return {[](double x) { return std::exp(x); }, Monotonicity::increasing, "exp(x)"}; }

Integrand inverse_power(int n) {
  if (n < 3) throw InputError("inverse power exponent must be >= 3");
  return {[n](double x) { return std::pow(x, -n); }, Monotonicity::decreasing, "x^-" + std::to_string(n)};
}

Integrand constant(double c) {
  return {[c](double) { return c; }, Monotonicity::increasing, "const"};
}

Integrand abs_shift(double c) {
  return {[c](double x) { return std::abs(x - c); }, Monotonicity::general, "|x-c|"};
}

Integrand polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw InputError("polynomial needs at least one coefficient");
  return {[coeffs = std::move(coeffs)](double x) {
            double v = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
            return v;
          },
          Monotonicity::general, "poly"};
}

}  // namespace qm::leb2
