#include "oscilspec_cli/reference.hpp"

#include <cctype>

namespace oscilspec::cli {

const std::vector<ReferenceEigenvalue>& reference_eigenvalues() {
  static const std::vector<ReferenceEigenvalue> all = {
      {"A", 0, "-2.000000000000000000"}, {"A", 1, "-1.772726698991350330"},
      {"A", 2, "2.078279891768595361"},  {"A", 3, "5.604028342382013654"},
      {"B", 0, "-9.001720238527719715"}, {"B", 1, "-9.000000000000000000"},
      {"B", 2, "0.639394262865333280"},  {"B", 3, "1.936629224926380607"},
      {"C", 0, "0.375000000000000000"},  {"C", 1, "2.357398881839175696"},
      {"C", 2, "6.988755014467723300"},  {"C", 3, "13.88051623671388190"},
      {"D", 0, "-0.195122059734627597"}, {"D", 1, "1.125000000000000000"},
      {"D", 2, "5.646143524135629302"},  {"D", 3, "12.38474674598872574"},
      {"F", 0, "-0.223991055384171854"}, {"F", 1, "0.083481557863966793"},
      {"F", 2, "1.526487708073844797"},  {"F", 3, "3.971174256474939459"},
      {"G", 0, "-0.096291946230649098"}, {"G", 1, "0.672993242745446704"},
      {"G", 2, "3.111022328724771653"},  {"G", 3, "7.038082659880398654"},
      {"H", 0, "0.807741647209432443"},  {"H", 1, "3.277946311571061982"},
      {"H", 2, "7.667480496116480534"},  {"H", 3, "13.578984131990285801"},
  };
  return all;
}

const std::vector<ReferenceMoment>& reference_moments() {
  static const std::vector<ReferenceMoment> all = {
      {"A", 0, 1, "1.7042723043", "1.7043", ""},
      {"A", 0, 2, "3.9085446087", "3.9085", ""},
      {"A", 0, 3, "10.373497673", "10.3735", ""},
      {"A", 0, 4, "30.518356869", "30.5184", ""},
      {"A", 0, 5, "97.343955598", "97.3440", ""},
      {"B", 1, 1, "3.1795525642", "3.1796", ""},
      {"B", 1, 2, "11.0386576927", "11.0387", ""},
      {"B", 1, 3, "41.0648544887", "41.0649", ""},
      {"B", 1, 4, "161.8298653908", "161.8299", ""},
      {"B", 1, 5, "670.2814413720", "670.82814",
       "closed-form column reads 670.82814, inconsistent with 670.2814413720; treated as a misprint"},
      {"C", 0, 1, "0.45832470069", "0.4583", ""},
      {"C", 0, 2, "0.43854420934", "0.4385", ""},
      {"C", 0, 3, "0.54740034191", "0.5474", ""},
      {"C", 0, 4, "0.79673314349", "0.7967", ""},
      {"C", 0, 5, "1.28945196690", "1.2895", ""},
      {"D", 1, 1, "0.956841751448", "0.9568", ""},
      {"D", 1, 2, "1.194350514116", "1.1944", ""},
      {"D", 1, 3, "1.738359600265", "1.7384", ""},
      {"D", 1, 4, "2.8134027359576611", "2.8134", ""},
      {"D", 1, 5, "4.935043317278", "4.9350", ""},
  };
  return all;
}

const std::vector<ExactLevel>& exact_levels() {
  static const std::vector<ExactLevel> all = {
      {"A", 0, "-2"}, {"B", 1, "-9"}, {"C", 0, "0.375"}, {"D", 1, "1.125"}};
  return all;
}

namespace {

struct Decimal {
  bool negative = false;
  std::string digits;  // all digits, leading zeros stripped
  int decimals = 0;    // digits after the point in the original string
  int integer_digits = 0;
};

Decimal split(std::string_view s) {
  Decimal d;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) d.negative = s[i++] == '-';
  bool after_point = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      after_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) break;
    if (after_point) {
      ++d.decimals;
    } else {
      ++d.integer_digits;
    }
    if (d.digits.empty() && s[i] == '0') continue;
    d.digits.push_back(s[i]);
  }
  return d;
}

// Reference string truncated to `decimals` places, in the layout of to_fixed.
std::string cut(std::string_view s, int decimals) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto point = s.find('.');
  if (point == std::string_view::npos) {
    std::string out(s);
    if (decimals > 0) out += "." + std::string(static_cast<std::size_t>(decimals), '0');
    return out;
  }
  std::string out(s.substr(0, point));
  if (decimals > 0) {
    std::string frac(s.substr(point + 1, static_cast<std::size_t>(decimals)));
    frac.resize(static_cast<std::size_t>(decimals), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace

int significant_digits(std::string_view decimal) { return static_cast<int>(split(decimal).digits.size()); }

int matched_digits(const BigReal& computed, std::string_view reference) {
  const Decimal ref = split(reference);
  const int quoted = static_cast<int>(ref.digits.size());
  for (int k = quoted; k >= 1; --k) {
    const int decimals = ref.decimals - (quoted - k);
    if (decimals < 0) break;
    const std::string ref_cut = cut(reference, decimals);
    if (computed.to_fixed_truncated(decimals) == ref_cut || computed.to_fixed(decimals) == ref_cut) return k;
  }
  return 0;
}

}  // namespace oscilspec::cli
