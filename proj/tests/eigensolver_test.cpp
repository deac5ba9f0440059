#include <gtest/gtest.h>

#include "oscilspec/errors.hpp"
#include "oscilspec/eigensolver.hpp"
#include "oscilspec_cli/reference.hpp"
#include "support.hpp"

using namespace oscilspec;
using testing_support::big;
using testing_support::cached_spectrum;
using testing_support::preset_problem;

namespace {

bool brackets_contain(const std::vector<EnergyBracket>& bs, const BigReal& e) {
  for (const auto& b : bs) {
    if (!(e < b.lo) && !(e > b.hi)) return true;
  }
  return false;
}

BigReal box_level(int n, int digits = 60) {
  const BigReal pi = BigReal::pi(digits);
  return pi * pi * static_cast<long>(n * n) / 4L;
}

}  // namespace

TEST(BoundaryProblem, Validation) {
  EXPECT_THROW(BoundaryProblem(Potential{}, BigReal(0L, 30)), ParseError);
  EXPECT_THROW(BoundaryProblem(Potential{}, BigReal(-1L, 30)), ParseError);
  EXPECT_THROW(BoundaryProblem(Potential{}, BigReal(1L, 30), 9), ParseError);
}

TEST(BoundaryValue, BoxGroundIsAZero) {
  auto bp = preset_problem("box");
  EXPECT_LT(boundary_value(bp, Parity::Even, box_level(1)).log10_abs(), -20);
}

TEST(BoundaryValue, ThreeWellExactGround) {
  auto bp = preset_problem("A");
  EXPECT_LT(boundary_value(bp, Parity::Even, BigReal(-2L, 60)).log10_abs(), -12);
}

TEST(BoundaryValue, SignFlipsAcrossALevel) {
  auto bp = preset_problem("A");
  const BigReal at_zero = boundary_value(bp, Parity::Even, BigReal(0L, 40));
  const BigReal below = boundary_value(bp, Parity::Even, BigReal(-3L, 40));
  EXPECT_FALSE(at_zero.is_zero());
  EXPECT_EQ(at_zero.sign(), -below.sign());
}

TEST(ScanBrackets, BoxEvenLevels) {
  auto bp = preset_problem("box");
  auto bs = scan_brackets(bp, Parity::Even, BigReal(0L, 40), BigReal(30L, 40), 300);
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_TRUE(brackets_contain(bs, box_level(1)));
  EXPECT_TRUE(brackets_contain(bs, box_level(3)));
}

TEST(ScanBrackets, SixWellOddContainsMinusNine) {
  auto bp = preset_problem("B");
  auto bs = scan_brackets(bp, Parity::Odd, BigReal(-15L, 40), BigReal(5L, 40), 200);
  EXPECT_TRUE(brackets_contain(bs, BigReal(-9L, 40)));
}

TEST(ScanBrackets, FourWellEvenLevels) {
  auto bp = preset_problem("F");
  auto bs = scan_brackets(bp, Parity::Even, BigReal(-1L, 40), BigReal(5L, 40), 120);
  ASSERT_GE(bs.size(), 2u);
  EXPECT_TRUE(brackets_contain(bs, big("-0.2240")));
  EXPECT_TRUE(brackets_contain(bs, big("1.5265")));
}

TEST(ScanBrackets, Errors) {
  auto bp = preset_problem("box");
  EXPECT_THROW(scan_brackets(bp, Parity::Even, BigReal(3L, 30), BigReal(1L, 30), 10), ParseError);
  EXPECT_THROW(scan_brackets(bp, Parity::Even, BigReal(1L, 30), BigReal(3L, 30), 1), ParseError);
}

TEST(RefineRoot, BoxGround) {
  auto bp = preset_problem("box");
  auto e = refine_root(bp, Parity::Even, {big("2.4"), big("2.5")});
  EXPECT_LT(abs(e.energy - box_level(1)).log10_abs(), -20);
  EXPECT_GE(e.converged_digits, 20);
  EXPECT_EQ(e.nodes, 0);
  EXPECT_TRUE(e.wall_resolved);
}

TEST(RefineRoot, ClosedFormLevels) {
  auto c = refine_root(preset_problem("C"), Parity::Even, {big("0.35"), big("0.45")});
  EXPECT_EQ(c.energy.to_fixed(18), "0.375000000000000000");
  auto d = refine_root(preset_problem("D"), Parity::Odd, {big("1.0"), big("1.2")});
  EXPECT_EQ(d.energy.to_fixed(18), "1.125000000000000000");
  EXPECT_EQ(d.nodes, 1);
}

TEST(RefineRoot, RejectsBracketWithoutSignChange) {
  EXPECT_THROW(refine_root(preset_problem("box"), Parity::Even, {big("3"), big("4")}), NoSignChange);
}

TEST(CountNodes, KnownStates) {
  auto bp_a = preset_problem("A");
  EXPECT_EQ(count_nodes(bp_a, cached_spectrum("A")[0]), 0);
  auto bp_b = preset_problem("B");
  EXPECT_EQ(count_nodes(bp_b, cached_spectrum("B")[1]), 1);
  auto bp_h = preset_problem("H");
  EXPECT_EQ(count_nodes(bp_h, cached_spectrum("H")[3]), 3);
  EXPECT_THROW(count_nodes(bp_h, cached_spectrum("H")[3], 16), ParseError);
}

TEST(Spectrum, ThreeWell) {
  const auto& s = cached_spectrum("A");
  const char* want[] = {"-2.000000000000", "-1.772726698991", "2.078279891768", "5.604028342382"};
  for (int k = 0; k < 4; ++k) {
    EXPECT_GE(oscilspec::cli::matched_digits(s[static_cast<std::size_t>(k)].energy, want[k]), 13) << k;
  }
}

TEST(Spectrum, FourWellG) {
  const auto& s = cached_spectrum("G");
  EXPECT_EQ(s[0].energy.to_fixed_truncated(12), "-0.096291946230");
  EXPECT_EQ(s[1].energy.to_fixed_truncated(12), "0.672993242745");
  EXPECT_EQ(s[2].energy.to_fixed_truncated(12), "3.111022328724");
  EXPECT_EQ(s[3].energy.to_fixed_truncated(12), "7.038082659880");
}

TEST(Spectrum, BoxLevels) {
  auto s = spectrum(preset_problem("box"), 3);
  ASSERT_EQ(s.size(), 3u);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_LT(abs(s[static_cast<std::size_t>(n - 1)].energy - box_level(n)).log10_abs() - box_level(n).log10_abs(), -20);
  }
}

TEST(Spectrum, Invariants) {
  for (const char* name : {"A", "B", "C", "D", "F", "G", "H"}) {
    const auto bp = preset_problem(name);
    const auto& s = cached_spectrum(name);
    ASSERT_EQ(s.size(), 4u);
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(s[k].level, static_cast<int>(k)) << name;
      EXPECT_EQ(s[k].nodes, static_cast<int>(k)) << name;
      EXPECT_EQ(s[k].parity, k % 2 ? Parity::Odd : Parity::Even) << name;
      EXPECT_TRUE(s[k].wall_resolved);
      EXPECT_FALSE(s[k].doublet);
      EXPECT_GE(s[k].converged_digits, 20) << name;
      if (k > 0) EXPECT_TRUE(s[k - 1].energy < s[k].energy) << name;
      EXPECT_LT(boundary_value(bp, s[k].parity, s[k].energy).log10_abs(), -s[k].converged_digits + 2) << name;
    }
  }
}

TEST(Spectrum, WideningTheBoxLowersEveryLevel) {
  const auto l3 = spectrum(preset_problem("A", 20, "3"), 4);
  const auto& l4 = cached_spectrum("A");
  const auto l5 = spectrum(preset_problem("A", 20, "5"), 4);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_TRUE(l4[k].energy < l3[k].energy) << k;
    EXPECT_TRUE(l5[k].energy < l4[k].energy) << k;
    // The walls at 4 already reproduce the unbounded levels to 13+ digits.
    const BigReal rel = abs(l5[k].energy - l4[k].energy) / max_abs(l4[k].energy, BigReal(1L, 20));
    EXPECT_LT(rel.log10_abs(), -13) << k;
  }
}

TEST(Spectrum, NearDegenerateDoubletIsFlagged) {
  auto bp = preset_problem("doublewell", 20);
  auto s = spectrum(bp, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s[0].doublet);
  EXPECT_TRUE(s[1].doublet);
  EXPECT_EQ(s[0].parity, Parity::Even);
  EXPECT_EQ(s[1].parity, Parity::Odd);
  EXPECT_EQ(s[1].nodes, 1);
}

TEST(Spectrum, RejectsEmptyRequest) { EXPECT_THROW(spectrum(preset_problem("box"), 0), ParseError); }
