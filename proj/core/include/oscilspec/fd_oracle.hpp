#pragma once

#include <vector>

#include "oscilspec/potential.hpp"

namespace oscilspec {

/// Central-difference discretization of -Psi'' + V Psi = E Psi on [-L, L]
/// with Dirichlet walls and M interior points.
struct FDGrid {
  long double half_width = 1.0L;
  int interior_points = 0;
  long double h = 0.0L;
  std::vector<long double> diagonal;
  long double off_diagonal = 0.0L;
};

/// h = 2L/(M+1), x_i = -L + (i+1) h, diagonal V(x_i) + 2/h^2, off-diagonal -1/h^2.
FDGrid make_fd_grid(const Potential& p, long double half_width, int interior_points);

/// Number of eigenvalues of the grid matrix strictly below x (Sturm count).
int sturm_count(const FDGrid& grid, long double x);

/// Lowest `count` eigenvalues by bisection on Sturm counts, ascending.
std::vector<long double> tridiagonal_eigenvalues(const FDGrid& grid, int count);

/// Lowest `count` finite-difference eigenvalues with M interior points. With
/// `richardson` the run is repeated on 2M+1 points (exactly half the spacing)
/// and the O(h^2) term is eliminated: E = (4 E_fine - E_coarse) / 3.
std::vector<long double> fd_spectrum(const Potential& p, long double half_width, int interior_points, int count,
                                     bool richardson = false);

struct FDConvergence {
  std::vector<long double> coarse;  // M
  std::vector<long double> fine;    // 2M+1
  std::vector<long double> finer;   // 4M+3
  std::vector<long double> extrapolated;
  /// log2 of successive difference ratios; 2 for a second-order scheme.
  std::vector<double> order;
  /// |E_fine - E_coarse| / 3, the Richardson error estimate of E_fine.
  std::vector<long double> error_estimate;
};

/// Three-grid self-convergence study at M, 2M+1, 4M+3.
FDConvergence fd_convergence(const Potential& p, long double half_width, int interior_points, int count);

}  // namespace oscilspec
