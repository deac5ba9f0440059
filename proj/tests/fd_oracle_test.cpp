#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscilspec/errors.hpp"
#include "oscilspec/fd_oracle.hpp"

using namespace oscilspec;

namespace {
constexpr long double kPi = std::numbers::pi_v<long double>;
Potential pot(const std::map<std::string, std::string>& r) { return parse_potential(r); }
}  // namespace

TEST(FDGrid, Layout) {
  auto g = make_fd_grid(pot({{"x^2", "1"}}), 1.0L, 3);
  EXPECT_EQ(g.h, 0.5L);
  ASSERT_EQ(g.diagonal.size(), 3u);
  EXPECT_NEAR(static_cast<double>(g.diagonal[0]), 0.25 + 8.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(g.diagonal[1]), 8.0, 1e-15);
  EXPECT_EQ(g.off_diagonal, -4.0L);
  EXPECT_THROW(make_fd_grid(pot({}), 0.0L, 3), ParseError);
  EXPECT_THROW(make_fd_grid(pot({}), 1.0L, 0), ParseError);
}

TEST(FDOracle, DiscreteBoxSpectrumIsExact) {
  // Eigenvalues of the free discrete Laplacian are (4/h^2) sin^2(k pi / 2(M+1)).
  const int m = 50;
  auto g = make_fd_grid(pot({}), 1.0L, m);
  auto ev = tridiagonal_eigenvalues(g, 6);
  for (int k = 1; k <= 6; ++k) {
    const long double s = std::sin(k * kPi / (2.0L * (m + 1)));
    EXPECT_NEAR(static_cast<double>(ev[static_cast<std::size_t>(k - 1)]),
                static_cast<double>(4.0L / (g.h * g.h) * s * s), 1e-12);
  }
}

TEST(FDOracle, SturmCountIsMonotone) {
  auto g = make_fd_grid(pot({{"x^2", "1"}, {"x^4", "-4"}, {"x^6", "1"}}), 4.0L, 400);
  int prev = 0;
  for (long double x = -20.0L; x < 60.0L; x += 0.37L) {
    int c = sturm_count(g, x);
    EXPECT_GE(c, prev);
    prev = c;
  }
  auto ev = tridiagonal_eigenvalues(g, 4);
  for (std::size_t k = 0; k < ev.size(); ++k) {
    EXPECT_EQ(sturm_count(g, ev[k] - 1e-9L), static_cast<int>(k));
    EXPECT_EQ(sturm_count(g, ev[k] + 1e-9L), static_cast<int>(k) + 1);
  }
}

TEST(FDOracle, BoxGroundState) {
  auto ev = fd_spectrum(pot({}), 1.0L, 2000, 1);
  EXPECT_NEAR(static_cast<double>(ev[0]), static_cast<double>(kPi * kPi / 4.0L), 1e-5);
}

TEST(FDOracle, RichardsonImprovesTheBox) {
  const long double exact = kPi * kPi / 4.0L;
  auto plain = fd_spectrum(pot({}), 1.0L, 200, 1);
  auto rich = fd_spectrum(pot({}), 1.0L, 200, 1, true);
  EXPECT_LT(std::fabs(rich[0] - exact), std::fabs(plain[0] - exact) / 100.0L);
}

TEST(FDOracle, ThreeWellGround) {
  auto ev = fd_spectrum(pot({{"x^2", "1"}, {"x^4", "-4"}, {"x^6", "1"}}), 4.0L, 4000, 1);
  EXPECT_NEAR(static_cast<double>(ev[0]), -2.0, 1e-5);
  auto rich = fd_spectrum(pot({{"x^2", "1"}, {"x^4", "-4"}, {"x^6", "1"}}), 4.0L, 4000, 1, true);
  EXPECT_NEAR(static_cast<double>(rich[0]), -2.0, 1e-5);
}

TEST(FDOracle, FiveWellFirstFour) {
  const double ref[] = {0.807741647209432443, 3.277946311571061982, 7.667480496116480534, 13.578984131990285801};
  auto ev = fd_spectrum(
      pot({{"x^2", "2"}, {"x^4", "-7.5"}, {"x^6", "5.5"}, {"x^8", "-0.877"}, {"x^10", "0.04"}}), 4.0L, 4000, 4, true);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(static_cast<double>(ev[static_cast<std::size_t>(k)]), ref[k], 1e-4);
}

TEST(FDOracle, SecondOrderConvergence) {
  auto c = fd_convergence(pot({{"x^2", "4"}, {"x^4", "-6"}, {"x^6", "1"}}), 4.0L, 1000, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(c.order[k], 2.0, 0.2) << k;
    const long double ratio = (c.coarse[k] - c.fine[k]) / (c.fine[k] - c.finer[k]);
    EXPECT_NEAR(static_cast<double>(ratio), 4.0, 0.5);
    EXPECT_GT(c.error_estimate[k], 0.0L);
  }
}
