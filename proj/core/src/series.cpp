#include "oscilspec/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscilspec/errors.hpp"

namespace oscilspec {

namespace {

// Terms that must be consecutively negligible before the sum is truncated.
constexpr int kQuietTerms = 8;
constexpr int kTruncationGuardDigits = 4;

struct SumRun {
  BigReal value;
  BigReal scale;
  std::vector<BigReal> coeffs;
  int n_max = 0;
};

// Advances the recurrence by one parity step: writes a[n] from a[n-2], a[n-4], ...
void next_coefficient(std::vector<BigReal>& a, int n, const BigReal& energy, const std::vector<BigReal>& b,
                      BigReal& scratch) {
  BigReal& out = a[static_cast<std::size_t>(n)];
  mpfr_mul(out.raw(), energy.raw(), a[static_cast<std::size_t>(n - 2)].raw(), MPFR_RNDN);
  mpfr_neg(out.raw(), out.raw(), MPFR_RNDN);
  for (std::size_t k = 1; k <= b.size(); ++k) {
    int idx = n - 2 - 2 * static_cast<int>(k);
    if (idx < 0) break;
    const BigReal& prev = a[static_cast<std::size_t>(idx)];
    if (prev.is_zero()) continue;
    mpfr_mul(scratch.raw(), b[k - 1].raw(), prev.raw(), MPFR_RNDN);
    mpfr_add(out.raw(), out.raw(), scratch.raw(), MPFR_RNDN);
  }
  mpfr_div_ui(out.raw(), out.raw(), static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1), MPFR_RNDN);
}

std::vector<BigReal> seed(Parity parity, int digits) {
  std::vector<BigReal> a;
  a.emplace_back(parity == Parity::Even ? 1L : 0L, digits);
  a.emplace_back(parity == Parity::Even ? 0L : 1L, digits);
  return a;
}

// Sums the series at one working precision. Truncation happens after eight
// (or degree+1) consecutive nonzero-parity terms below 10^-(t+4) of the
// reference magnitude: the running partial sum for Tolerance::Value, the
// running maximum partial sum for Tolerance::PartialSum.
SumRun sum_once(const Potential& p, const BigReal& energy_in, Parity parity, const BigReal& x_in, int digits,
                int target_digits, int max_order, Tolerance tolerance) {
  const auto b = p.coefficients(digits);
  const BigReal energy = energy_in.with_digits(digits);
  const BigReal x = x_in.with_digits(digits);
  BigReal x2 = x * x;

  SumRun run{BigReal(digits), BigReal(digits), seed(parity, digits), 0};
  auto& a = run.coeffs;
  a.reserve(1024);

  const int first = first_power(parity);
  BigReal power = parity == Parity::Even ? BigReal(1L, digits) : x;
  BigReal term = a[static_cast<std::size_t>(first)] * power;
  run.value = term;
  run.scale = abs(run.value);

  const BigReal quiet_ratio = pow10(-(target_digits + kTruncationGuardDigits), 20);
  BigReal threshold = run.scale * quiet_ratio;
  BigReal scratch(digits);
  const int needed_quiet = std::max(kQuietTerms, p.degree() + 1);
  int quiet = 0;

  int n = first;
  while (quiet < needed_quiet) {
    n += 2;
    if (n > max_order) {
      throw PrecisionExhausted("series did not converge within " + std::to_string(max_order) + " terms");
    }
    a.resize(static_cast<std::size_t>(n) + 1, BigReal(1));
    a[static_cast<std::size_t>(n)].set_digits(digits);
    next_coefficient(a, n, energy, b, scratch);
    mpfr_mul(power.raw(), power.raw(), x2.raw(), MPFR_RNDN);
    mpfr_mul(term.raw(), a[static_cast<std::size_t>(n)].raw(), power.raw(), MPFR_RNDN);
    mpfr_add(run.value.raw(), run.value.raw(), term.raw(), MPFR_RNDN);
    if (mpfr_cmpabs(run.value.raw(), run.scale.raw()) > 0) {
      mpfr_abs(run.scale.raw(), run.value.raw(), MPFR_RNDN);
      if (tolerance == Tolerance::PartialSum) mpfr_mul(threshold.raw(), run.scale.raw(), quiet_ratio.raw(), MPFR_RNDN);
    }
    if (tolerance == Tolerance::Value) {
      mpfr_mul(threshold.raw(), run.value.raw(), quiet_ratio.raw(), MPFR_RNDN);
    }
    quiet = term.is_zero() || mpfr_cmpabs(term.raw(), threshold.raw()) < 0 ? quiet + 1 : 0;
  }
  // Wrong-parity slots created by resize are low-precision zeros; widen them so
  // every coefficient carries the working precision.
  for (auto& c : a) {
    if (c.is_zero()) c.set_digits(digits);
  }
  run.n_max = n;
  return run;
}

double loss_digits(const BigReal& scale, const BigReal& value) {
  if (scale.is_zero()) return 0.0;
  if (value.is_zero()) return static_cast<double>(scale.digits());
  return std::max(0.0, scale.log10_abs() - value.log10_abs());
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

BigReal SeriesSolution::evaluate(const BigReal& x) const {
  BigReal scale;
  return evaluate(x, scale);
}

BigReal SeriesSolution::evaluate(const BigReal& x_in, BigReal& partial_sum_scale) const {
  const int digits = std::max(working_digits, x_in.digits());
  BigReal sum(digits);
  partial_sum_scale = BigReal(digits);
  if (coeffs.empty()) return sum;
  const BigReal x = x_in.with_digits(digits);
  BigReal x2 = x * x;
  BigReal power = parity == Parity::Even ? BigReal(1L, digits) : x;
  BigReal term(digits);
  for (std::size_t n = static_cast<std::size_t>(first_power(parity)); n < coeffs.size(); n += 2) {
    mpfr_mul(term.raw(), coeffs[n].raw(), power.raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    if (mpfr_cmpabs(sum.raw(), partial_sum_scale.raw()) > 0) mpfr_abs(partial_sum_scale.raw(), sum.raw(), MPFR_RNDN);
    mpfr_mul(power.raw(), power.raw(), x2.raw(), MPFR_RNDN);
  }
  return sum;
}

SeriesSolution series_coefficients(const Potential& p, const BigReal& energy_in, Parity parity, int n_max,
                                   int working_digits) {
  n_max = std::max(n_max, 2);
  const auto b = p.coefficients(working_digits);
  const BigReal energy = energy_in.with_digits(working_digits);
  SeriesSolution s;
  s.parity = parity;
  s.energy = energy;
  s.n_max = n_max;
  s.working_digits = working_digits;
  s.coeffs = seed(parity, working_digits);
  s.coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 2; n <= n_max; ++n) s.coeffs.emplace_back(working_digits);
  BigReal scratch(working_digits);
  for (int n = first_power(parity) + 2; n <= n_max; n += 2) next_coefficient(s.coeffs, n, energy, b, scratch);
  return s;
}

PsiResult psi_at(const Potential& p, const BigReal& energy, Parity parity, const BigReal& x, int target_digits,
                 const PsiOptions& options) {
  int digits = std::max(options.start_digits, target_digits + 20);
  if (digits > options.limits.max_digits) {
    throw PrecisionExhausted("requested precision " + std::to_string(digits) + " exceeds ceiling " +
                             std::to_string(options.limits.max_digits));
  }
  const BigReal tolerance_ratio = pow10(-target_digits, 20);
  SumRun previous = sum_once(p, energy, parity, x, digits, target_digits, options.limits.max_order, options.tolerance);
  for (;;) {
    const int next_digits = 2 * digits;
    if (next_digits > options.limits.max_digits) {
      throw PrecisionExhausted("working precision ceiling of " + std::to_string(options.limits.max_digits) +
                               " digits reached before the series value stabilised");
    }
    SumRun current = sum_once(p, energy, parity, x, next_digits, target_digits, options.limits.max_order, options.tolerance);
    BigReal diff = abs(current.value - previous.value);
    const BigReal& reference = options.tolerance == Tolerance::Value ? current.value : current.scale;
    if (!(diff > abs(reference) * tolerance_ratio)) {
      PsiResult result{current.value, current.scale, SeriesSolution{}};
      auto& s = result.series;
      s.parity = parity;
      s.energy = energy.with_digits(next_digits);
      s.coeffs = std::move(current.coeffs);
      s.n_max = current.n_max;
      s.working_digits = next_digits;
      s.cancellation_loss = loss_digits(current.scale, current.value);
      return result;
    }
    previous = std::move(current);
    digits = next_digits;
  }
}

}  // namespace oscilspec
