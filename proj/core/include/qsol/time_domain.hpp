#pragma once

#include <vector>

namespace qsol {

/// Time intervals of the problem: a history interval [t0 - history, t0],
/// a forward interval [t0, t0 + length], and the sub-span
/// [t0 - monotone_span, t0] on which class members must be nondecreasing.
struct TimeDomain {
  double t0 = 0.0;
  double length = 1.0;         // L > 0
  double history = 0.0;        // r >= 0
  double monotone_span = 0.0;  // r_hat, 0 <= r_hat <= r

  double t_min() const { return t0 - history; }
  double t_max() const { return t0 + length; }
  double monotone_start() const { return t0 - monotone_span; }

  /// Throws DomainError if the invariants L > 0, r >= 0, 0 <= r_hat <= r fail.
  void validate() const;
};

/// Uniform grid over [t0 - r, t0 + L] with target spacing h. t0 is always a
/// node; the history segment gets its own uniform sub-grid pinned to t0, so r
/// need not divide h. Returns the node vector and writes the index of t0.
std::vector<double> grid_nodes(const TimeDomain& d, double h, std::size_t* t0_index = nullptr);

/// Forward sub-grid [t0, t0 + L] only.
std::vector<double> grid_nodes_forward(const TimeDomain& d, double h);

}  // namespace qsol
