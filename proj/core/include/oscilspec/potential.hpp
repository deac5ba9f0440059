#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "oscilspec/bigreal.hpp"

namespace oscilspec {

/// One monomial b_{2k} x^{2k} of an even potential.
struct PotentialTerm {
  int k = 1;
  mpq_class coefficient;
};

/// Even polynomial potential V(x) = sum_k b_{2k} x^{2k}, k >= 1.
///
/// Coefficients are held as exact rationals; they are rounded only when a
/// caller asks for them at a working precision. The empty potential (particle
/// in a box) is allowed.
class Potential {
 public:
  Potential() = default;
  /// Validates the terms: k >= 1, no repeated k, positive leading coefficient.
  /// Zero coefficients are dropped. Throws ParseError.
  explicit Potential(std::vector<PotentialTerm> terms, std::string name = {});

  [[nodiscard]] const std::vector<PotentialTerm>& terms() const { return terms_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// Highest k present, 0 for the zero potential.
  [[nodiscard]] int degree() const { return terms_.empty() ? 0 : terms_.back().k; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Exact coefficient b_{2k}, zero when the term is absent.
  [[nodiscard]] mpq_class coefficient(int k) const;
  /// Dense b_{2k} for k = 1..degree() rounded to `digits`; index 0 is b_2.
  [[nodiscard]] std::vector<BigReal> coefficients(int digits) const;

  [[nodiscard]] BigReal evaluate(const BigReal& x, int digits) const;
  [[nodiscard]] long double evaluate(long double x) const;

  /// Smallest value of V on [-half_width, half_width], sampled on a dense grid.
  [[nodiscard]] double sampled_minimum(double half_width, int samples = 20001) const;

  /// Canonical "x^2k" -> exact-rational-string record.
  [[nodiscard]] std::map<std::string, std::string> to_record() const;

 private:
  std::vector<PotentialTerm> terms_;
  std::string name_;
};

/// Exact rational from "p/q", an integer, or a decimal with optional exponent
/// ("0.877", "-1.5e-3"). No binary rounding happens. Throws ParseError.
mpq_class parse_exact_number(std::string_view text);

/// Builds a potential from a record mapping "x^2", "x^4", ... to coefficient
/// strings. Throws ParseError on odd or zero exponents, malformed numbers, or
/// a non-positive leading coefficient.
Potential parse_potential(const std::map<std::string, std::string>& record, std::string name = {});

/// Value of V at x evaluated with exact rational arithmetic.
mpq_class evaluate_exact(const Potential& p, const mpq_class& x);

}  // namespace oscilspec
