#include <gtest/gtest.h>

#include "oscilspec/errors.hpp"
#include "oscilspec/series.hpp"
#include "support.hpp"

using namespace oscilspec;
using testing_support::big;

namespace {
Potential box() { return parse_potential({}); }
Potential pot_a() { return parse_potential({{"x^2", "1"}, {"x^4", "-4"}, {"x^6", "1"}}, "A"); }
Potential pot_h() {
  return parse_potential({{"x^2", "2"}, {"x^4", "-7.5"}, {"x^6", "5.5"}, {"x^8", "-0.877"}, {"x^10", "0.04"}}, "H");
}
}  // namespace

TEST(SeriesCoefficients, BoxIsCosineSeries) {
  const BigReal e = big("1.7");
  auto s = series_coefficients(box(), e, Parity::Even, 8, 40);
  EXPECT_EQ(s.coeffs[0], 1L);
  EXPECT_TRUE(s.coeffs[1].is_zero());
  EXPECT_LT(abs(s.coeffs[2] + e / 2L).log10_abs(), -38);
  EXPECT_LT(abs(s.coeffs[4] - e * e / 24L).log10_abs(), -38);
}

TEST(SeriesCoefficients, ThreeWellSubstitution) {
  const BigReal e = big("0.3");
  auto s = series_coefficients(pot_a(), e, Parity::Even, 6, 40);
  EXPECT_LT(abs(s.coeffs[2] + e / 2L).log10_abs(), -38);
  BigReal a4 = (e * e / 2L + 1L) / 12L;
  EXPECT_LT(abs(s.coeffs[4] - a4).log10_abs(), -38);
}

TEST(SeriesCoefficients, ParityZerosAreExact) {
  auto even = series_coefficients(pot_h(), big("2.5"), Parity::Even, 41, 30);
  auto odd = series_coefficients(pot_h(), big("2.5"), Parity::Odd, 41, 30);
  for (int n = 0; n <= 41; ++n) {
    if (n % 2) {
      EXPECT_TRUE(even.coeffs[static_cast<std::size_t>(n)].is_zero());
    } else {
      EXPECT_TRUE(odd.coeffs[static_cast<std::size_t>(n)].is_zero());
    }
  }
  EXPECT_EQ(odd.coeffs[1], 1L);
}

TEST(PsiAt, ClosedFormGroundStateOfThreeWell) {
  // E = -2 is exact, so the series is exp(x^2 - x^4/4) with no growing admixture.
  for (const char* xs : {"0.5", "1.5", "2.5", "4"}) {
    const BigReal x = big(xs);
    auto r = psi_at(pot_a(), BigReal(-2L, 60), Parity::Even, x, 20);
    const BigReal exact = exp(x * x - x * x * x * x / 4L);
    EXPECT_LT((abs(r.value / exact - 1L)).log10_abs(), -18) << xs;
  }
}

TEST(PsiAt, ThreeWellWallRatio) {
  auto r = psi_at(pot_a(), BigReal(-2L, 60), Parity::Even, BigReal(4L, 60), 20);
  const BigReal ratio = r.value / r.series.coeffs[0];
  EXPECT_LT((abs(ratio / exp(BigReal(-48L, 60)) - 1L)).log10_abs(), -18);
  EXPECT_GT(r.series.cancellation_loss, 10.0);
}

TEST(PsiAt, BoxWallZero) {
  const BigReal e = BigReal::pi(80) * BigReal::pi(80) / 4L;
  PsiOptions opts;
  opts.tolerance = Tolerance::PartialSum;
  auto r = psi_at(box(), e, Parity::Even, BigReal(1L, 80), 20, opts);
  EXPECT_LT(r.value.log10_abs() - r.scale.log10_abs(), -20);
}

TEST(PsiAt, FiveWellGroundStateNearlyVanishesAtWall) {
  const BigReal e = big("0.807741647209432443");
  PsiOptions opts;
  opts.tolerance = Tolerance::PartialSum;
  auto r = psi_at(pot_h(), e, Parity::Even, BigReal(4L, 60), 20, opts);
  BigReal max_term(60);
  BigReal power(1L, r.series.working_digits);
  for (std::size_t n = 0; n < r.series.coeffs.size(); n += 2) {
    BigReal t = abs(r.series.coeffs[n] * power);
    if (t > max_term) max_term = t;
    power *= 16L;
  }
  EXPECT_LT(r.value.log10_abs() - max_term.log10_abs(), -12);
}

TEST(PsiAt, BoxMatchesTrigonometry) {
  const BigReal e = big("7.3");
  const BigReal k = sqrt(e);
  for (const char* xs : {"0.1", "0.7", "1.0"}) {
    const BigReal x = big(xs);
    auto even = psi_at(box(), e, Parity::Even, x, 25);
    auto odd = psi_at(box(), e, Parity::Odd, x, 25);
    EXPECT_LT(abs(even.value - cos(k * x)).log10_abs(), -25) << xs;
    EXPECT_LT(abs(odd.value - sin(k * x) / k).log10_abs(), -25) << xs;
  }
}

TEST(PsiAt, DoublingStability) {
  const BigReal e = big("1.2345");
  const BigReal x(4L, 60);
  auto r = psi_at(pot_a(), e, Parity::Odd, x, 20);
  auto twice_order = series_coefficients(pot_a(), e, Parity::Odd, 2 * r.series.n_max, r.series.working_digits);
  auto twice_prec = series_coefficients(pot_a(), e, Parity::Odd, r.series.n_max, 2 * r.series.working_digits);
  const double lg = r.value.log10_abs();
  EXPECT_LT(abs(twice_order.evaluate(x) - r.value).log10_abs() - lg, -20);
  EXPECT_LT(abs(twice_prec.evaluate(x) - r.value).log10_abs() - lg, -20);
}

TEST(PsiAt, ParitySymmetryIsBitExact) {
  auto r = psi_at(pot_h(), big("3.3"), Parity::Odd, BigReal(4L, 60), 20);
  for (const char* xs : {"0.3", "1.9", "3.999"}) {
    const BigReal x = big(xs);
    EXPECT_EQ(r.series.evaluate(-x), -r.series.evaluate(x));
  }
  auto s = psi_at(pot_h(), big("3.3"), Parity::Even, BigReal(4L, 60), 20);
  EXPECT_EQ(s.series.evaluate(-big("2.2")), s.series.evaluate(big("2.2")));
}

TEST(PsiAt, CeilingsRaise) {
  PsiOptions opts;
  opts.limits.max_order = 20;
  EXPECT_THROW(psi_at(pot_a(), big("1"), Parity::Even, BigReal(4L, 60), 20, opts), PrecisionExhausted);
  PsiOptions tight;
  tight.limits.max_digits = 45;
  EXPECT_THROW(psi_at(pot_a(), big("1"), Parity::Even, BigReal(4L, 60), 20, tight), PrecisionExhausted);
}

TEST(PsiAt, OriginValues) {
  auto even = psi_at(pot_a(), big("3"), Parity::Even, BigReal(0L, 40), 20);
  auto odd = psi_at(pot_a(), big("3"), Parity::Odd, BigReal(0L, 40), 20);
  EXPECT_EQ(even.value, 1L);
  EXPECT_TRUE(odd.value.is_zero());
}
