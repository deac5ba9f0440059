#include "oscilspec/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace oscilspec {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

mpfr_prec_t max_bits(const BigReal& a, const BigReal& b) { return std::max(a.bits(), b.bits()); }

std::string print(const char* format, int digits, mpfr_srcptr value) {
  char* buffer = nullptr;
  int n = mpfr_asprintf(&buffer, format, digits, value);
  if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  return out;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  auto bits = static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * kLog2Of10)) + 4;
  return std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

int bits_to_digits(mpfr_prec_t bits) { return static_cast<int>(std::floor(static_cast<double>(bits - 4) / kLog2Of10)); }

BigReal::BigReal(int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(std::string_view decimal, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  std::string text(decimal);
  if (text.empty() || mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave the moved-from object as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::pi(int digits) {
  BigReal out(digits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::with_bits(mpfr_prec_t bits) {
  BigReal out(1);
  mpfr_set_prec(out.value_, bits);
  mpfr_set_zero(out.value_, 1);
  return out;
}

BigReal BigReal::with_digits(int digits) const {
  BigReal out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

void BigReal::set_digits(int digits) { mpfr_prec_round(value_, digits_to_bits(digits), MPFR_RNDN); }

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  if (!is_finite()) return std::numeric_limits<double>::infinity();
  long exponent = 0;
  double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * 0.30102999566398119521;
}

std::string BigReal::to_scientific(int significant) const {
  return print("%.*Re", std::max(significant - 1, 0), value_);
}

std::string BigReal::to_fixed(int decimals) const { return print("%.*Rf", std::max(decimals, 0), value_); }

std::string BigReal::to_fixed_truncated(int decimals) const {
  return print("%.*RZf", std::max(decimals, 0), value_);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal out(x);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out = BigReal::with_bits(max_bits(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out = BigReal::with_bits(max_bits(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out = BigReal::with_bits(max_bits(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out = BigReal::with_bits(max_bits(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal out(a);
  mpfr_add_si(out.value_, out.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal out(a);
  mpfr_sub_si(out.value_, out.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal out(a);
  out *= b;
  return out;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal out(a);
  out /= b;
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_scientific(x.digits()); }

BigReal abs(const BigReal& x) {
  BigReal out(x);
  mpfr_abs(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x);
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x);
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) {
  BigReal out(x);
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal cos(const BigReal& x) {
  BigReal out(x);
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, unsigned long n) {
  BigReal out(x);
  mpfr_pow_ui(out.raw(), x.raw(), n, MPFR_RNDN);
  return out;
}

BigReal pow10(long e, int digits) {
  BigReal out(digits);
  mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
  return out;
}

const BigReal& max_abs(const BigReal& a, const BigReal& b) { return mpfr_cmpabs(a.raw(), b.raw()) >= 0 ? a : b; }

}  // namespace oscilspec
