#include "oscilspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "oscilspec/errors.hpp"

namespace oscilspec {

namespace {

constexpr int kMaxRootIterations = 4000;
constexpr int kPeakGrid = 64;
constexpr int kPolishRounds = 4;

// Boundary function Psi(L; E) for one parity. Carries the cancellation seen at
// the previous energy forward as the starting precision of the next call.
class BoundaryFunction {
 public:
  struct Sample {
    BigReal raw;
    BigReal scale;
  };

  BoundaryFunction(const BoundaryProblem& bp, Parity parity) : bp_(bp), parity_(parity) {}

  Sample operator()(const BigReal& energy) {
    PsiOptions options;
    options.limits = bp_.limits;
    options.start_digits = start_digits_;
    options.tolerance = Tolerance::Value;
    auto r = psi_at(bp_.potential, energy, parity_, bp_.half_width, bp_.target_digits, options);
    const int pad = static_cast<int>(std::ceil(std::min(r.series.cancellation_loss, 1.0e6)));
    start_digits_ = std::min(bp_.target_digits + 20 + pad, bp_.limits.max_digits / 2);
    last_series_ = std::move(r.series);
    return {std::move(r.value), std::move(r.scale)};
  }

  [[nodiscard]] const SeriesSolution& last_series() const { return last_series_; }

 private:
  const BoundaryProblem& bp_;
  Parity parity_;
  int start_digits_ = 0;
  SeriesSolution last_series_;
};

int energy_digits(const BoundaryProblem& bp) { return bp.target_digits + 20; }

// |E| for |E| >= 1, 1 otherwise: the unit in which converged digits are counted.
BigReal digit_unit(const BigReal& e) {
  BigReal u = abs(e);
  if (u < 1L) u = BigReal(1L, e.digits());
  return u;
}

int digits_from_width(const BigReal& width, const BigReal& energy) {
  if (width.is_zero()) return energy.digits();
  double d = -(width.log10_abs() - digit_unit(energy).log10_abs());
  return std::clamp(static_cast<int>(std::floor(d)), 0, energy.digits());
}

struct RootState {
  BigReal lo, hi;
  BigReal f_lo, f_hi;
  BigReal best;
  BigReal f_best;
};

// Bisection safeguarded Illinois iteration on a sign-change interval. Stops
// once the interval is narrower than `width_stop` (relative to max(1,|E|)) or,
// when `value_stop` is given, as soon as |f| at an iterate falls below it.
RootState illinois(BoundaryFunction& f, RootState s, const BigReal& width_ratio,
                   const std::optional<BigReal>& value_stop, int e_digits) {
  s.lo.set_digits(e_digits);
  s.hi.set_digits(e_digits);
  BigReal w_lo = s.f_lo;
  BigReal w_hi = s.f_hi;
  int last_side = 0;
  BigReal width_two_back = s.hi - s.lo;
  BigReal width_one_back = width_two_back;
  bool force_bisect = false;

  auto finish_from_bracket = [&]() {
    // Regula falsi point of the final interval.
    BigReal denom = s.f_hi - s.f_lo;
    if (denom.is_zero()) {
      s.best = (s.lo + s.hi) / 2L;
    } else {
      s.best = (s.lo * s.f_hi - s.hi * s.f_lo) / denom;
      if (s.best < s.lo || s.best > s.hi) s.best = (s.lo + s.hi) / 2L;
    }
    s.f_best = abs(s.f_lo) < abs(s.f_hi) ? s.f_lo : s.f_hi;
    return s;
  };

  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    BigReal width = s.hi - s.lo;
    BigReal unit = digit_unit(s.lo);
    if (!value_stop && !(width > unit * width_ratio)) return finish_from_bracket();
    // Widen the energy representation before the bracket reaches its last bits.
    if (!(width > unit * pow10(-(e_digits - 8), 20))) {
      e_digits += 20;
      s.lo.set_digits(e_digits);
      s.hi.set_digits(e_digits);
    }

    BigReal x(e_digits);
    bool use_secant = !force_bisect;
    if (use_secant) {
      BigReal denom = w_hi - w_lo;
      if (denom.is_zero()) {
        use_secant = false;
      } else {
        x = (s.lo * w_hi - s.hi * w_lo) / denom;
        BigReal margin = width / 64L;
        if (!(x > s.lo + margin) || !(x < s.hi - margin)) use_secant = false;
      }
    }
    if (!use_secant) x = (s.lo + s.hi) / 2L;
    x.set_digits(e_digits);

    auto sample = f(x);
    BigReal& fx = sample.raw;
    if (fx.is_zero()) {
      s.lo = x;
      s.hi = x;
      s.best = x;
      s.f_best = fx;
      s.f_lo = fx;
      s.f_hi = fx;
      return s;
    }
    if (fx.sign() == s.f_lo.sign()) {
      s.lo = x;
      s.f_lo = fx;
      w_lo = fx;
      if (last_side == -1) w_hi /= 2L;
      last_side = -1;
    } else {
      s.hi = x;
      s.f_hi = fx;
      w_hi = fx;
      if (last_side == 1) w_lo /= 2L;
      last_side = 1;
    }
    if (value_stop && !(abs(fx) > *value_stop)) {
      s.best = x;
      s.f_best = fx;
      return s;
    }
    BigReal new_width = s.hi - s.lo;
    force_bisect = new_width > width_two_back / 2L;
    width_two_back = width_one_back;
    width_one_back = new_width;
  }
  throw PrecisionExhausted("root refinement did not converge in " + std::to_string(kMaxRootIterations) +
                           " iterations");
}

BigReal grid_peak(const SeriesSolution& s, const BigReal& L) {
  BigReal peak(s.working_digits);
  for (int i = 0; i <= kPeakGrid; ++i) {
    BigReal x = L * static_cast<long>(i) / static_cast<long>(kPeakGrid);
    BigReal v = abs(s.evaluate(x));
    if (v > peak) peak = v;
  }
  return peak;
}

int sign_with_noise(const BigReal& v, const BigReal& noise) { return abs(v) > noise ? v.sign() : 0; }

}  // namespace

BoundaryProblem::BoundaryProblem(Potential p, BigReal L, int digits, SeriesLimits lim)
    : potential(std::move(p)), half_width(std::move(L)), target_digits(digits), limits(lim) {
  if (!(half_width > 0L)) throw ParseError("wall half-width L must be positive");
  if (target_digits < 10) throw ParseError("target digits must be at least 10");
}

BigReal boundary_value(const BoundaryProblem& bp, Parity parity, const BigReal& energy) {
  BoundaryFunction f(bp, parity);
  auto s = f(energy);
  if (s.scale.is_zero()) return s.raw;
  return s.raw / s.scale;
}

std::vector<EnergyBracket> scan_brackets(const BoundaryProblem& bp, Parity parity, const BigReal& e_min,
                                         const BigReal& e_max, int steps) {
  if (!(e_min < e_max)) throw ParseError("scan window must satisfy E_min < E_max");
  if (steps < 2) throw ParseError("scan needs at least 2 steps");
  const int digits = std::max(energy_digits(bp), std::max(e_min.digits(), e_max.digits()));
  const BigReal lo = e_min.with_digits(digits);
  const BigReal span = e_max.with_digits(digits) - lo;

  BoundaryFunction f(bp, parity);
  std::vector<EnergyBracket> out;
  BigReal prev_e = lo;
  int prev_sign = f(prev_e).raw.sign();
  if (prev_sign == 0) out.push_back({prev_e, prev_e});
  for (int i = 1; i <= steps; ++i) {
    BigReal e = lo + span * static_cast<long>(i) / static_cast<long>(steps);
    int sign = f(e).raw.sign();
    if (sign == 0) {
      out.push_back({e, e});
    } else if (prev_sign != 0 && sign != prev_sign) {
      out.push_back({prev_e, e});
    }
    prev_e = std::move(e);
    prev_sign = sign;
  }
  return out;
}

Eigenpair refine_root(const BoundaryProblem& bp, Parity parity, const EnergyBracket& bracket) {
  const int e_digits = std::max(energy_digits(bp), std::max(bracket.lo.digits(), bracket.hi.digits()));
  BoundaryFunction f(bp, parity);
  Eigenpair eig;
  eig.parity = parity;

  BigReal lo = bracket.lo.with_digits(e_digits);
  BigReal hi = bracket.hi.with_digits(e_digits);
  if (hi < lo) std::swap(lo, hi);

  if (lo == hi) {
    if (!f(lo).raw.is_zero()) throw NoSignChange("degenerate bracket is not a root");
    eig.energy = lo;
    eig.bracket = {lo, hi};
    eig.converged_digits = e_digits;
  } else {
    BigReal f_lo = f(lo).raw;
    BigReal f_hi = f(hi).raw;
    if (f_lo.sign() * f_hi.sign() > 0) {
      throw NoSignChange("boundary value has the same sign at both ends of [" + lo.to_scientific(12) + ", " +
                         hi.to_scientific(12) + "]");
    }
    RootState state{lo, hi, f_lo, f_hi, BigReal(e_digits), BigReal(e_digits)};
    if (f_lo.is_zero() || f_hi.is_zero()) {
      const BigReal& root = f_lo.is_zero() ? lo : hi;
      state = RootState{root, root, BigReal(e_digits), BigReal(e_digits), root, BigReal(e_digits)};
    } else {
      state = illinois(f, std::move(state), pow10(-(bp.target_digits + 2), 20), std::nullopt, e_digits);
    }
    eig.energy = state.best;
    eig.bracket = {state.lo, state.hi};
    eig.converged_digits = std::min(digits_from_width(state.hi - state.lo, state.best), bp.target_digits + 2);
  }

  auto ef = eigenfunction(bp, eig);
  ef.pair.nodes = count_nodes(bp, ef);
  ef.pair.level = ef.pair.nodes;
  return ef.pair;
}

Eigenfunction eigenfunction(const BoundaryProblem& bp, const Eigenpair& eig) {
  BoundaryFunction f(bp, eig.parity);
  Eigenfunction ef;
  ef.pair = eig;
  const BigReal& L = bp.half_width;

  for (int round = 0; round < kPolishRounds; ++round) {
    auto sample = f(ef.pair.energy);
    ef.series = f.last_series();
    ef.peak = grid_peak(ef.series, L);
    ef.wall_value = sample.raw;
    ef.excess_digits = std::max(0.0, sample.scale.log10_abs() - ef.peak.log10_abs());
    const BigReal threshold = ef.peak * pow10(-bp.target_digits, 20);
    if (!(abs(ef.wall_value) > threshold)) {
      ef.pair.wall_resolved = true;
      return ef;
    }

    const auto& br = ef.pair.bracket;
    if (!(br.lo < br.hi)) throw NoSignChange("eigenpair carries no bracket to refine inside");
    BigReal f_lo = f(br.lo).raw;
    BigReal f_hi = f(br.hi).raw;
    if (f_lo.sign() * f_hi.sign() > 0) throw NoSignChange("eigenpair bracket lost its sign change");

    // Energy digits needed so that Psi(L) can reach the threshold.
    const double deficit = ef.wall_value.log10_abs() - threshold.log10_abs();
    const int e_digits = std::max(ef.pair.energy.digits(), energy_digits(bp)) + static_cast<int>(deficit) + 10;
    RootState state{br.lo, br.hi, f_lo, f_hi, BigReal(e_digits), BigReal(e_digits)};
    state = illinois(f, std::move(state), pow10(-e_digits, 20), threshold, e_digits);

    BigReal width = state.hi - state.lo;
    BigReal slope = (state.f_hi - state.f_lo) / width;
    BigReal error = slope.is_zero() ? width : abs(state.f_best / slope);
    if (error > width) error = width;
    ef.pair.energy = state.best;
    ef.pair.bracket = {state.lo, state.hi};
    ef.pair.converged_digits = std::max(ef.pair.converged_digits, digits_from_width(error, state.best));
  }
  throw PrecisionExhausted("could not drive Psi(L) below 10^-" + std::to_string(bp.target_digits) +
                           " of the wavefunction peak");
}

int count_nodes(const BoundaryProblem& bp, const Eigenpair& eig, int grid_points) {
  return count_nodes(bp, eigenfunction(bp, eig), grid_points);
}

int count_nodes(const BoundaryProblem& bp, const Eigenfunction& ef, int grid_points) {
  if (grid_points < 64) throw ParseError("node counting needs at least 64 grid points");
  const BigReal& L = bp.half_width;
  const BigReal noise = ef.peak * pow10(-bp.target_digits, 20);
  const long half = grid_points / 2;

  auto sign_at = [&](const BigReal& x) { return sign_with_noise(ef.series.evaluate(x), noise); };

  // Samples on [0, L); the mirror half follows by parity. Just right of the
  // origin the sign is known exactly: Psi(0) = 1 (even) or Psi'(0) = 1 (odd).
  std::vector<BigReal> xs{BigReal(0L, L.digits())};
  std::vector<int> signs{1};
  for (long i = 1; i < half; ++i) {
    BigReal x = L * i / half;
    signs.push_back(sign_at(x));
    xs.push_back(std::move(x));
  }

  // The trailing run that is indistinguishable from the wall zero is not a node.
  std::size_t end = signs.size();
  while (end > 0 && signs[end - 1] == 0) --end;

  int changes = 0;
  std::size_t prev = 0;
  for (std::size_t i = 1; i < end; ++i) {
    if (signs[i] == 0) continue;
    if (signs[i] != signs[prev] || i > prev + 1) {
      // Re-examine every sign flip and every noise gap on a finer grid, so a
      // close pair of nodes inside one cell is not reported as a single one.
      constexpr long kSub = 32;
      int current = signs[prev];
      int local = 0;
      bool definite = false;
      for (long j = 1; j < kSub; ++j) {
        int s = sign_at(xs[prev] + (xs[i] - xs[prev]) * j / kSub);
        if (s == 0) continue;
        definite = true;
        if (s != current) {
          ++local;
          current = s;
        }
      }
      if (current != signs[i]) ++local;
      if (i > prev + 1 && !definite && signs[i] == signs[prev]) {
        throw AmbiguousNode("wavefunction is below the noise floor inside the box near x = " +
                            xs[prev].to_scientific(8) + "; a node pair cannot be excluded");
      }
      changes += local;
    }
    prev = i;
  }
  return 2 * changes + (ef.pair.parity == Parity::Odd ? 1 : 0);
}

std::vector<Eigenpair> spectrum(const BoundaryProblem& bp, int count, const SpectrumOptions& options) {
  if (count < 1) throw ParseError("spectrum needs count >= 1");
  const int digits = energy_digits(bp);
  const double v_min = bp.potential.sampled_minimum(bp.half_width.to_double());
  const BigReal e_floor(std::min(0.0, std::floor(v_min)) - 1.0, digits);
  const BigReal box_scale = BigReal::pi(digits) * BigReal::pi(digits) / (bp.half_width * bp.half_width * 4L);

  const int need[2] = {(count + 1) / 2, count / 2};
  int steps = options.scan_steps;

  for (int attempt = 0; attempt <= options.max_rescans; ++attempt) {
    std::vector<Eigenpair> levels;
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const int wanted = need[parity == Parity::Even ? 0 : 1];
      if (wanted == 0) continue;
      std::vector<EnergyBracket> found;
      BigReal lo = e_floor;
      // First window reaches comfortably above the count-th box level.
      BigReal width = box_scale * static_cast<long>((count + 1) * (count + 1)) + 8L;
      while (static_cast<int>(found.size()) < wanted) {
        BigReal hi = lo + width;
        auto more = scan_brackets(bp, parity, lo, hi, steps);
        for (auto& b : more) {
          if (!found.empty() && found.back().hi == b.lo && b.lo == b.hi) continue;
          found.push_back(std::move(b));
        }
        lo = hi;
        width = width * 2L;
        if (width.log10_abs() > 9) throw MissedLevel("no eigenvalues found below 1e9");
      }
      for (int k = 0; k < wanted; ++k) {
        levels.push_back(refine_root(bp, parity, found[static_cast<std::size_t>(k)]));
      }
    }
    std::sort(levels.begin(), levels.end(), [](const Eigenpair& a, const Eigenpair& b) {
      if (a.energy == b.energy) return a.parity == Parity::Even && b.parity == Parity::Odd;
      return a.energy < b.energy;
    });

    const BigReal tie = pow10(-bp.target_digits, 20);
    bool consistent = true;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (levels[k].nodes != static_cast<int>(k)) consistent = false;
      levels[k].level = static_cast<int>(k);
      if (k > 0 && levels[k].parity != levels[k - 1].parity &&
          !(abs(levels[k].energy - levels[k - 1].energy) > digit_unit(levels[k].energy) * tie)) {
        levels[k].doublet = true;
        levels[k - 1].doublet = true;
      }
    }
    if (consistent) return levels;
    steps *= 2;
  }
  throw MissedLevel("node counts disagree with level indices after " + std::to_string(options.max_rescans) +
                    " rescans");
}

}  // namespace oscilspec
