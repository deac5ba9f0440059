#pragma once

#include <vector>

#include "oscilspec/bigreal.hpp"
#include "oscilspec/potential.hpp"

namespace oscilspec {

enum class Parity { Even, Odd };

const char* to_string(Parity p);
/// First exponent with a nonzero coefficient: 0 for Even, 1 for Odd.
inline int first_power(Parity p) { return p == Parity::Even ? 0 : 1; }

/// Ceilings that stop the adaptive series evaluation from running away.
struct SeriesLimits {
  int max_order = 20000;
  int max_digits = 2000;
};

/// Truncated power series Psi(x) = sum_{n<=n_max} a_n x^n for one energy and parity.
struct SeriesSolution {
  Parity parity = Parity::Even;
  BigReal energy;
  /// a_0 .. a_{n_max}; entries of the wrong parity are exactly zero.
  std::vector<BigReal> coeffs;
  int n_max = 0;
  int working_digits = 0;
  /// log10(max |partial sum| / |final sum|) at the evaluation point.
  double cancellation_loss = 0.0;

  /// Horner evaluation in x^2; exact parity symmetry Psi(-x) = +-Psi(x).
  [[nodiscard]] BigReal evaluate(const BigReal& x) const;
  /// Evaluation that also reports the largest partial-sum magnitude, the
  /// natural noise scale of the sum.
  [[nodiscard]] BigReal evaluate(const BigReal& x, BigReal& partial_sum_scale) const;
};

/// Coefficients from the three-term-per-monomial recurrence
///   a_n = (-E a_{n-2} + sum_k b_{2k} a_{n-2-2k}) / (n (n-1)),
/// seeded by (a_0, a_1) = (1, 0) for Even and (0, 1) for Odd.
SeriesSolution series_coefficients(const Potential& p, const BigReal& energy, Parity parity, int n_max,
                                   int working_digits);

/// How psi_at judges that two successive precisions agree.
enum class Tolerance {
  /// |difference| <= 10^-t |value|.
  Value,
  /// |difference| <= 10^-t max|partial sum|; usable when the value may vanish.
  PartialSum,
};

struct PsiOptions {
  SeriesLimits limits;
  /// Starting working precision; values below target + 20 are raised to it.
  int start_digits = 0;
  Tolerance tolerance = Tolerance::Value;
};

struct PsiResult {
  BigReal value;
  /// Largest partial-sum magnitude seen while summing.
  BigReal scale;
  SeriesSolution series;
};

/// Psi(x; E) summed with an adaptive truncation order and working precision.
///
/// Terms are generated until eight consecutive nonzero-parity terms fall below
/// 10^-(t+4) of the reference magnitude (the running partial sum, or the
/// running maximum partial sum under Tolerance::PartialSum). The whole sum is
/// repeated at doubled precision until two successive precisions agree to t
/// digits.
/// Throws PrecisionExhausted when either ceiling in `options.limits` is hit.
PsiResult psi_at(const Potential& p, const BigReal& energy, Parity parity, const BigReal& x, int target_digits,
                 const PsiOptions& options = {});

}  // namespace oscilspec
