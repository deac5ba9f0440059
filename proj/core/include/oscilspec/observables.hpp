#pragma once

#include <string>
#include <vector>

#include "oscilspec/bigreal.hpp"
#include "oscilspec/eigensolver.hpp"
#include "oscilspec/series.hpp"

namespace oscilspec {

struct MomentReport {
  std::string potential;
  int level = 0;
  int m = 0;
  /// <x^{2m}> = I_{2m} / I_0 with I_j the integral of x^j Psi^2 over the box.
  BigReal value;
  int converged_digits = 0;
};

/// Coefficients c_j = sum_i a_i a_{j-i} of Psi^2, j = 0..2 n_max.
std::vector<BigReal> squared_series(const SeriesSolution& s);

/// <x^{2m}> by exact term-wise integration of the squared series. The sum is
/// repeated with doubled precision and doubled order until two passes agree to
/// the problem's target digits. m = 0 returns exactly 1.
MomentReport moment(const BoundaryProblem& bp, const Eigenpair& eig, int m);

/// Several moments of one state sharing a single squared series.
std::vector<MomentReport> moments(const BoundaryProblem& bp, const Eigenpair& eig, const std::vector<int>& ms);

/// Same as above for an already resolved eigenfunction.
std::vector<MomentReport> moments(const BoundaryProblem& bp, const Eigenfunction& ef, const std::vector<int>& ms);

enum class Normalization { None, UnitNorm, PeakOne };

struct GridPoint {
  BigReal x;
  BigReal psi;
};

/// Psi on `points` uniformly spaced abscissae covering [-L, L] inclusive. Wall
/// values below 10^-t of the peak are reported as exact zeros.
std::vector<GridPoint> wavefunction_grid(const BoundaryProblem& bp, const Eigenpair& eig, int points,
                                         Normalization normalization);

}  // namespace oscilspec
