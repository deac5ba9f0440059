#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace oscilspec {

/// Number of binary mantissa bits needed to carry `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Decimal digits carried by a mantissa of `bits` bits (rounded down).
int bits_to_digits(mpfr_prec_t bits);

/// Owning wrapper around an MPFR value.
///
/// Every value carries its own mantissa precision. Binary operations produce
/// a result at the larger precision of the two operands; operations with a
/// plain integer keep the precision of the big operand. Rounding is always to
/// nearest.
class BigReal {
 public:
  static constexpr int kDefaultDigits = 40;

  BigReal() : BigReal(kDefaultDigits) {}
  /// Zero at `digits` decimal digits.
  explicit BigReal(int digits);
  BigReal(int value, int digits) : BigReal(static_cast<long>(value), digits) {}
  BigReal(long value, int digits);
  BigReal(double value, int digits);
  BigReal(const mpq_class& value, int digits);
  BigReal(std::string_view decimal, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(int digits);
  /// Zero with an explicit mantissa width in bits.
  static BigReal with_bits(mpfr_prec_t bits);

  /// Copy of this value rounded to a new precision.
  [[nodiscard]] BigReal with_digits(int digits) const;
  void set_digits(int digits);

  [[nodiscard]] mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  [[nodiscard]] int digits() const { return bits_to_digits(bits()); }

  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }

  /// Approximate base-10 logarithm of |x|; -inf for zero. Accurate far beyond
  /// the range of double because it goes through the binary exponent.
  [[nodiscard]] double log10_abs() const;
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  [[nodiscard]] long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits, e.g. "-1.7727266989913503e+00".
  [[nodiscard]] std::string to_scientific(int significant) const;
  /// Fixed notation with `decimals` digits after the point, rounded to nearest.
  [[nodiscard]] std::string to_fixed(int decimals) const;
  /// Fixed notation truncated toward zero.
  [[nodiscard]] std::string to_fixed_truncated(int decimals) const;

  mpfr_ptr raw() { return value_; }
  [[nodiscard]] mpfr_srcptr raw() const { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator-(const BigReal& x);
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal pow(const BigReal& x, unsigned long n);
/// 10^e at the given precision.
BigReal pow10(long e, int digits);
const BigReal& max_abs(const BigReal& a, const BigReal& b);

}  // namespace oscilspec
