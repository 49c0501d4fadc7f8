#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "qsol/time_domain.hpp"

namespace qsol {

/// Continuous piecewise-linear function given by values on a strictly
/// increasing node set. Evaluation between nodes is linear interpolation,
/// so node-wise order statements carry over to the whole interval.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> ts, std::vector<double> ys);

  static GridFunction sample(const std::vector<double>& ts,
                             const std::function<double(double)>& f);
  static GridFunction constant(const std::vector<double>& ts, double c);

  std::size_t size() const { return ts_.size(); }
  bool empty() const { return ts_.empty(); }
  const std::vector<double>& times() const { return ts_; }
  const std::vector<double>& values() const { return ys_; }
  double time(std::size_t i) const { return ts_[i]; }
  double value(std::size_t i) const { return ys_[i]; }
  void set_value(std::size_t i, double y) { ys_[i] = y; }

  double front_time() const { return ts_.front(); }
  double back_time() const { return ts_.back(); }

  /// Linear interpolation; accepts t up to tol_dom = 1e-6 * (local cell width)
  /// outside the span and throws DomainError beyond that.
  double eval(double t) const;

  /// Linear interpolation with hard clamping of t to the span.
  double eval_clamped(double t) const;

  double sup_norm() const;
  bool same_grid(const GridFunction& other) const;

 private:
  std::vector<double> ts_;
  std::vector<double> ys_;
};

double eval(const GridFunction& g, double t);

/// Node-wise g1 <= g2 + tol. Throws GridMismatch on different node sets.
bool partial_le(const GridFunction& g1, const GridFunction& g2, double tol);

/// max over nodes of |g1 - g2| (exact sup distance for shared-grid
/// piecewise-linear functions). Throws GridMismatch.
double sup_distance(const GridFunction& g1, const GridFunction& g2);

/// True iff successive node values on [a, b] never decrease by more than tol.
/// [a, b] must lie inside the span (DomainError otherwise).
bool is_nondecreasing_on(const GridFunction& g, double a, double b, double tol);

GridFunction nodewise_max(const GridFunction& a, const GridFunction& b);
GridFunction nodewise_min(const GridFunction& a, const GridFunction& b);

/// Composite trapezoid over the full node span.
double integral_trapezoid(const GridFunction& g);
/// Trapezoid of the product a*b over the shared grid.
double integral_trapezoid_product(const GridFunction& a, const GridFunction& b);
/// Running trapezoid integral, anchored to 0 at the first node.
GridFunction cumulative_trapezoid(const GridFunction& g);

/// Sub-function on nodes with a - slack <= t <= b + slack.
GridFunction restrict_to(const GridFunction& g, double a, double b);

/// Index of the node equal to d.t0 (DomainError when absent).
std::size_t t0_index(const GridFunction& g, const TimeDomain& d);

/// Scale-aware default tolerance for order tests: 1e-9 * (1 + sup norm).
double order_tolerance(const GridFunction& g);
double order_tolerance(const GridFunction& a, const GridFunction& b);

/// CSV with header "t,value", one row per node, 17 significant digits.
void write_csv(const GridFunction& g, std::ostream& os);
GridFunction read_csv(std::istream& is);

}  // namespace qsol
