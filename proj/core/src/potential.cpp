#include "oscilspec/potential.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "oscilspec/errors.hpp"

namespace oscilspec {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class ten_to(long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

mpq_class parse_exact_number(std::string_view text) {
  auto fail = [&]() -> ParseError { return ParseError("unparseable number '" + std::string(text) + "'"); };

  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) throw fail();
      if (std::labs(exponent) > 10000) throw fail();
      s = s.substr(0, e);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto int_part = s.substr(0, dot);
      auto frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw fail();
      if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) throw fail();
      digits = std::string(int_part) + std::string(frac_part);
      fraction_digits = static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(s)) throw fail();
      digits = std::string(s);
    }
    mpz_class mantissa(digits, 10);
    long scale = exponent - fraction_digits;
    if (scale >= 0) {
      value = mpq_class(mantissa * ten_to(scale));
    } else {
      value = mpq_class(mantissa, ten_to(-scale));
    }
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

Potential::Potential(std::vector<PotentialTerm> terms, std::string name) : name_(std::move(name)) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].k < 1) throw ParseError("potential exponents must be 2k with k >= 1");
    if (i > 0 && terms[i].k == terms[i - 1].k) {
      throw ParseError("repeated exponent x^" + std::to_string(2 * terms[i].k));
    }
  }
  std::erase_if(terms, [](const PotentialTerm& t) { return t.coefficient == 0; });
  if (!terms.empty() && terms.back().coefficient <= 0) {
    throw ParseError("leading coefficient b_" + std::to_string(2 * terms.back().k) + " must be positive, got " +
                     terms.back().coefficient.get_str());
  }
  terms_ = std::move(terms);
}

mpq_class Potential::coefficient(int k) const {
  for (const auto& t : terms_) {
    if (t.k == k) return t.coefficient;
  }
  return 0;
}

std::vector<BigReal> Potential::coefficients(int digits) const {
  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int k = 1; k <= degree(); ++k) out.emplace_back(coefficient(k), digits);
  return out;
}

BigReal Potential::evaluate(const BigReal& x, int digits) const {
  BigReal result(digits);
  if (terms_.empty()) return result;
  BigReal x2 = x.with_digits(digits);
  x2 *= x2;
  // Horner in x^2 over the dense coefficient list.
  auto b = coefficients(digits);
  for (int k = degree(); k >= 1; --k) {
    result += b[static_cast<std::size_t>(k - 1)];
    result *= x2;
  }
  return result;
}

long double Potential::evaluate(long double x) const {
  long double x2 = x * x;
  long double result = 0.0L;
  for (int k = degree(); k >= 1; --k) {
    result = (result + static_cast<long double>(coefficient(k).get_d())) * x2;
  }
  return result;
}

double Potential::sampled_minimum(double half_width, int samples) const {
  if (is_zero()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double x = half_width * static_cast<double>(i) / static_cast<double>(samples - 1);
    best = std::min(best, static_cast<double>(evaluate(static_cast<long double>(x))));
  }
  return best;
}

std::map<std::string, std::string> Potential::to_record() const {
  std::map<std::string, std::string> out;
  for (const auto& t : terms_) out["x^" + std::to_string(2 * t.k)] = t.coefficient.get_str();
  return out;
}

Potential parse_potential(const std::map<std::string, std::string>& record, std::string name) {
  std::vector<PotentialTerm> terms;
  for (const auto& [key, text] : record) {
    std::string_view k = key;
    if (k.size() < 3 || k.substr(0, 2) != "x^" || !all_digits(k.substr(2))) {
      throw ParseError("bad exponent key '" + key + "' (expected x^2, x^4, ...)");
    }
    int power = 0;
    auto [ptr, ec] = std::from_chars(k.data() + 2, k.data() + k.size(), power);
    if (ec != std::errc() || ptr != k.data() + k.size()) throw ParseError("bad exponent key '" + key + "'");
    if (power % 2 != 0) throw ParseError("non-even exponent in '" + key + "'");
    if (power == 0) throw ParseError("constant term '" + key + "' is not allowed; exponents start at x^2");
    terms.push_back({power / 2, parse_exact_number(text)});
  }
  return Potential(std::move(terms), std::move(name));
}

mpq_class evaluate_exact(const Potential& p, const mpq_class& x) {
  mpq_class x2 = x * x;
  mpq_class result = 0;
  for (int k = p.degree(); k >= 1; --k) result = (result + p.coefficient(k)) * x2;
  return result;
}

}  // namespace oscilspec
