#include "oscilspec/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oscilspec/errors.hpp"

namespace oscilspec {

FDGrid make_fd_grid(const Potential& p, long double half_width, int interior_points) {
  if (!(half_width > 0.0L)) throw ParseError("wall half-width L must be positive");
  if (interior_points < 1) throw ParseError("finite-difference grid needs at least one interior point");
  FDGrid g;
  g.half_width = half_width;
  g.interior_points = interior_points;
  g.h = 2.0L * half_width / static_cast<long double>(interior_points + 1);
  const long double inv_h2 = 1.0L / (g.h * g.h);
  g.off_diagonal = -inv_h2;
  g.diagonal.resize(static_cast<std::size_t>(interior_points));
  for (int i = 0; i < interior_points; ++i) {
    const long double x = -half_width + static_cast<long double>(i + 1) * g.h;
    g.diagonal[static_cast<std::size_t>(i)] = p.evaluate(x) + 2.0L * inv_h2;
  }
  return g;
}

int sturm_count(const FDGrid& grid, long double x) {
  const long double e2 = grid.off_diagonal * grid.off_diagonal;
  const long double tiny = std::numeric_limits<long double>::min() / std::numeric_limits<long double>::epsilon();
  int count = 0;
  long double q = 1.0L;
  for (std::size_t i = 0; i < grid.diagonal.size(); ++i) {
    q = grid.diagonal[i] - x - (i == 0 ? 0.0L : e2 / q);
    if (q == 0.0L) q = -tiny;
    if (q < 0.0L) ++count;
  }
  return count;
}

std::vector<long double> tridiagonal_eigenvalues(const FDGrid& grid, int count) {
  count = std::min(count, grid.interior_points);
  if (count <= 0) return {};
  // Gershgorin interval.
  const long double radius = 2.0L * std::fabs(grid.off_diagonal);
  long double lower = *std::min_element(grid.diagonal.begin(), grid.diagonal.end()) - radius;
  long double upper = *std::max_element(grid.diagonal.begin(), grid.diagonal.end()) + radius;

  std::vector<long double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    long double lo = out.empty() ? lower : out.back();
    long double hi = upper;
    // Invariant: sturm_count(lo) <= k < sturm_count(hi).
    for (int it = 0; it < 200; ++it) {
      const long double mid = 0.5L * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(grid, mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5L * (lo + hi));
  }
  return out;
}

std::vector<long double> fd_spectrum(const Potential& p, long double half_width, int interior_points, int count,
                                     bool richardson) {
  auto coarse = tridiagonal_eigenvalues(make_fd_grid(p, half_width, interior_points), count);
  if (!richardson) return coarse;
  auto fine = tridiagonal_eigenvalues(make_fd_grid(p, half_width, 2 * interior_points + 1), count);
  for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = (4.0L * fine[i] - coarse[i]) / 3.0L;
  return coarse;
}

FDConvergence fd_convergence(const Potential& p, long double half_width, int interior_points, int count) {
  FDConvergence c;
  c.coarse = fd_spectrum(p, half_width, interior_points, count);
  c.fine = fd_spectrum(p, half_width, 2 * interior_points + 1, count);
  c.finer = fd_spectrum(p, half_width, 4 * interior_points + 3, count);
  for (std::size_t i = 0; i < c.coarse.size(); ++i) {
    c.extrapolated.push_back((4.0L * c.fine[i] - c.coarse[i]) / 3.0L);
    c.error_estimate.push_back(std::fabs(c.fine[i] - c.coarse[i]) / 3.0L);
    const long double d1 = c.coarse[i] - c.fine[i];
    const long double d2 = c.fine[i] - c.finer[i];
    c.order.push_back(d2 == 0.0L ? std::numeric_limits<double>::quiet_NaN()
                                 : static_cast<double>(std::log2(std::fabs(d1 / d2))));
  }
  return c;
}

}  // namespace oscilspec
