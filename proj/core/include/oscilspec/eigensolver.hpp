#pragma once

#include <vector>

#include "oscilspec/bigreal.hpp"
#include "oscilspec/potential.hpp"
#include "oscilspec/series.hpp"

namespace oscilspec {

/// Potential confined between infinite walls at x = -L and x = +L.
struct BoundaryProblem {
  Potential potential;
  BigReal half_width{1L, 40};
  int target_digits = 20;
  SeriesLimits limits;

  BoundaryProblem() = default;
  /// Throws ParseError when L <= 0 or target_digits < 10.
  BoundaryProblem(Potential p, BigReal L, int digits = 20, SeriesLimits lim = {});
};

struct EnergyBracket {
  BigReal lo;
  BigReal hi;
};

struct Eigenpair {
  /// 0-based position in the merged spectrum; -1 until assigned.
  int level = -1;
  Parity parity = Parity::Even;
  BigReal energy;
  /// Relative digits for |E| >= 1, absolute decimal places below that.
  int converged_digits = 0;
  /// Interior zeros of the eigenfunction; -1 until counted.
  int nodes = -1;
  /// Set when an opposite-parity partner lies within 10^-t of this level.
  bool doublet = false;
  /// Final sign-change interval around `energy`.
  EnergyBracket bracket;
  /// Energy was refined until Psi(L) is negligible next to the wavefunction peak.
  bool wall_resolved = false;
};

/// Converged series for an eigenpair whose boundary value has been driven
/// below 10^-t of the wavefunction peak, so the series represents the bounded
/// eigenfunction on the whole box.
struct Eigenfunction {
  Eigenpair pair;
  SeriesSolution series;
  /// max |Psi| over a grid on [0, L] (unnormalised, a_0 = 1 or a_1 = 1).
  BigReal peak;
  /// Psi(L) of `series`.
  BigReal wall_value;
  /// log10(max partial sum / peak) at x = L; the digits lost when the series
  /// is summed or squared near the wall.
  double excess_digits = 0.0;
};

/// Psi_parity(L; E) with t relative digits, divided by the largest partial-sum
/// magnitude of the series so values at different E share a scale.
BigReal boundary_value(const BoundaryProblem& bp, Parity parity, const BigReal& energy);

/// Every adjacent pair on a uniform grid of `steps` intervals over
/// [e_min, e_max] where the boundary value changes sign. A grid point that is
/// an exact zero yields a degenerate bracket [E, E].
std::vector<EnergyBracket> scan_brackets(const BoundaryProblem& bp, Parity parity, const BigReal& e_min,
                                         const BigReal& e_max, int steps);

/// Locates the root inside `bracket` by bisection with Illinois secant steps,
/// then resolves the eigenfunction and counts its nodes (level = nodes).
/// Throws NoSignChange, PrecisionExhausted, AmbiguousNode.
Eigenpair refine_root(const BoundaryProblem& bp, Parity parity, const EnergyBracket& bracket);

/// Drives the energy further inside its bracket until |Psi(L)| <= 10^-t peak
/// and returns the matching converged series.
Eigenfunction eigenfunction(const BoundaryProblem& bp, const Eigenpair& eig);

/// Strict sign changes of Psi on an interior grid of (-L, L) with
/// `grid_points` points, excluding the wall zeros. Throws AmbiguousNode.
int count_nodes(const BoundaryProblem& bp, const Eigenpair& eig, int grid_points = 256);
int count_nodes(const BoundaryProblem& bp, const Eigenfunction& ef, int grid_points = 256);

struct SpectrumOptions {
  /// Scan intervals per window and parity; doubled after a MissedLevel.
  int scan_steps = 512;
  int node_grid = 256;
  int max_rescans = 3;
};

/// The lowest `count` eigenvalues over both parities, ascending, each checked
/// by node count == level. Throws MissedLevel if the check keeps failing.
std::vector<Eigenpair> spectrum(const BoundaryProblem& bp, int count, const SpectrumOptions& options = {});

}  // namespace oscilspec
