#include "oscilspec/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscilspec/errors.hpp"

namespace oscilspec {

namespace {

constexpr int kMaxDoublings = 6;

// I_j = sum_i c_i 2 L^{i+j+1} / (i+j+1) for the requested even j.
std::vector<BigReal> integrals(const std::vector<BigReal>& c, const BigReal& L_in, const std::vector<int>& js,
                               int digits) {
  const BigReal L = L_in.with_digits(digits);
  const BigReal L2 = L * L;
  std::vector<BigReal> out;
  out.reserve(js.size());
  BigReal term(digits);
  for (int j : js) {
    BigReal sum(digits);
    BigReal power = pow(L, static_cast<unsigned long>(j + 1)) * 2L;
    for (std::size_t i = 0; i < c.size(); i += 2) {
      if (!c[i].is_zero()) {
        mpfr_mul(term.raw(), c[i].raw(), power.raw(), MPFR_RNDN);
        mpfr_div_ui(term.raw(), term.raw(), i + static_cast<unsigned long>(j) + 1, MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      }
      mpfr_mul(power.raw(), power.raw(), L2.raw(), MPFR_RNDN);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

struct Pass {
  std::vector<BigReal> values;  // I_{2m} / I_0 per requested m, I_0 last
};

Pass run_pass(const BoundaryProblem& bp, const Eigenfunction& ef, const std::vector<int>& ms, int n, int digits) {
  const auto s = series_coefficients(bp.potential, ef.pair.energy, ef.pair.parity, n, digits);
  const auto c = squared_series(s);
  std::vector<int> js;
  js.reserve(ms.size() + 1);
  for (int m : ms) js.push_back(2 * m);
  js.push_back(0);
  auto I = integrals(c, bp.half_width, js, digits);
  Pass p;
  const BigReal& I0 = I.back();
  if (!(I0 > 0L)) throw PrecisionExhausted("norm integral is not positive");
  for (std::size_t k = 0; k < ms.size(); ++k) p.values.push_back(I[k] / I0);
  p.values.push_back(I0);
  return p;
}

int agreement_digits(const BigReal& a, const BigReal& b, int cap) {
  if (a == b) return cap;
  BigReal diff = abs(a - b);
  if (b.is_zero()) return 0;
  double d = b.log10_abs() - diff.log10_abs();
  return std::clamp(static_cast<int>(std::floor(d)), 0, cap);
}

// Repeats the pass with doubled order and precision until every requested
// quantity agrees to t digits. Returns the final pass plus per-entry digits.
std::pair<Pass, std::vector<int>> stable_passes(const BoundaryProblem& bp, const Eigenfunction& ef,
                                                const std::vector<int>& ms) {
  const int t = bp.target_digits;
  const int excess = static_cast<int>(std::ceil(ef.excess_digits));
  int digits = std::max(ef.series.working_digits, t + 2 * excess + 20);
  int n = ef.series.n_max;
  Pass previous = run_pass(bp, ef, ms, n, digits);
  for (int round = 0; round < kMaxDoublings; ++round) {
    const int next_digits = 2 * digits;
    const int next_n = 2 * n;
    if (next_digits > bp.limits.max_digits || next_n > bp.limits.max_order) break;
    Pass current = run_pass(bp, ef, ms, next_n, next_digits);
    std::vector<int> agree;
    bool ok = true;
    for (std::size_t k = 0; k < current.values.size(); ++k) {
      agree.push_back(agreement_digits(previous.values[k], current.values[k], next_digits));
      ok = ok && agree.back() >= t;
    }
    if (ok) return {std::move(current), std::move(agree)};
    previous = std::move(current);
    digits = next_digits;
    n = next_n;
  }
  throw PrecisionExhausted("moment integrals did not stabilise to " + std::to_string(t) + " digits");
}

}  // namespace

std::vector<BigReal> squared_series(const SeriesSolution& s) {
  const std::size_t n = s.coeffs.size();
  if (n == 0) return {};
  int digits = s.working_digits;
  for (const auto& a : s.coeffs) digits = std::max(digits, a.digits());
  std::vector<BigReal> c;
  c.reserve(2 * n - 1);
  for (std::size_t j = 0; j < 2 * n - 1; ++j) c.emplace_back(digits);

  const std::size_t first = static_cast<std::size_t>(first_power(s.parity));
  BigReal term(digits);
  // Only same-parity indices carry nonzero coefficients, so c_j needs i and
  // j - i both of that parity; pairs (i, j-i) and (j-i, i) are folded together.
  for (std::size_t i = first; i < n; i += 2) {
    const auto& ai = s.coeffs[i];
    if (ai.is_zero()) continue;
    mpfr_mul(term.raw(), ai.raw(), ai.raw(), MPFR_RNDN);
    mpfr_add(c[2 * i].raw(), c[2 * i].raw(), term.raw(), MPFR_RNDN);
    for (std::size_t k = i + 2; k < n; k += 2) {
      mpfr_mul(term.raw(), ai.raw(), s.coeffs[k].raw(), MPFR_RNDN);
      mpfr_mul_2ui(term.raw(), term.raw(), 1, MPFR_RNDN);
      mpfr_add(c[i + k].raw(), c[i + k].raw(), term.raw(), MPFR_RNDN);
    }
  }
  return c;
}

MomentReport moment(const BoundaryProblem& bp, const Eigenpair& eig, int m) {
  return moments(bp, eig, {m}).front();
}

std::vector<MomentReport> moments(const BoundaryProblem& bp, const Eigenpair& eig, const std::vector<int>& ms) {
  for (int m : ms) {
    if (m < 0) throw ParseError("moment order must be non-negative");
  }
  bool trivial = std::all_of(ms.begin(), ms.end(), [](int m) { return m == 0; });
  if (trivial) return moments(bp, Eigenfunction{eig, {}, {}, {}, 0.0}, ms);
  return moments(bp, eigenfunction(bp, eig), ms);
}

std::vector<MomentReport> moments(const BoundaryProblem& bp, const Eigenfunction& ef, const std::vector<int>& ms) {
  std::vector<int> nontrivial;
  for (int m : ms) {
    if (m < 0) throw ParseError("moment order must be non-negative");
    if (m > 0) nontrivial.push_back(m);
  }
  std::pair<Pass, std::vector<int>> result;
  if (!nontrivial.empty()) result = stable_passes(bp, ef, nontrivial);

  std::vector<MomentReport> out;
  std::size_t k = 0;
  for (int m : ms) {
    MomentReport r;
    r.potential = bp.potential.name();
    r.level = ef.pair.level;
    r.m = m;
    if (m == 0) {
      r.value = BigReal(1L, bp.target_digits + 20);
      r.converged_digits = bp.target_digits;
    } else {
      r.value = result.first.values[k];
      r.converged_digits = std::min(result.second[k], bp.target_digits);
      ++k;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GridPoint> wavefunction_grid(const BoundaryProblem& bp, const Eigenpair& eig, int points,
                                         Normalization normalization) {
  if (points < 2) throw ParseError("wavefunction grid needs at least 2 points");
  const auto ef = eigenfunction(bp, eig);
  const int digits = ef.series.working_digits;
  const BigReal L = bp.half_width.with_digits(digits);
  const BigReal wall_noise = ef.peak * pow10(-bp.target_digits, 20);

  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(points));
  BigReal peak(digits);
  for (int i = 0; i < points; ++i) {
    // Symmetric numerators keep mirrored abscissae exact negatives of each other.
    BigReal x = L * (2L * i - (points - 1)) / static_cast<long>(points - 1);
    BigReal psi = ef.series.evaluate(x);
    if ((i == 0 || i == points - 1) && !(abs(psi) > wall_noise)) psi = BigReal(digits);
    if (abs(psi) > peak) peak = abs(psi);
    grid.push_back({std::move(x), std::move(psi)});
  }

  BigReal scale(1L, digits);
  if (normalization == Normalization::PeakOne) {
    if (!peak.is_zero()) scale = peak;
  } else if (normalization == Normalization::UnitNorm) {
    auto result = stable_passes(bp, ef, {});
    scale = sqrt(result.first.values.back());
  }
  if (normalization != Normalization::None) {
    for (auto& g : grid) g.psi /= scale;
  }
  return grid;
}

}  // namespace oscilspec
