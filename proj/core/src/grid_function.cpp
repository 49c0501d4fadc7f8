#include "qsol/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qsol/errors.hpp"

namespace qsol {

namespace {

double local_tol_dom(const std::vector<double>& ts, bool front) {
  if (ts.size() < 2) return 1e-12;
  const double h = front ? ts[1] - ts[0] : ts[ts.size() - 1] - ts[ts.size() - 2];
  return h * 1e-6;
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where) {
  if (!a.same_grid(b)) throw GridMismatch(std::string(where) + ": node sets differ");
}

}  // namespace

GridFunction::GridFunction(std::vector<double> ts, std::vector<double> ys)
    : ts_(std::move(ts)), ys_(std::move(ys)) {
  if (ts_.empty()) throw DomainError("GridFunction: empty node set");
  if (ts_.size() != ys_.size()) throw DomainError("GridFunction: node/value size mismatch");
  for (std::size_t i = 1; i < ts_.size(); ++i)
    if (!(ts_[i] > ts_[i - 1])) throw DomainError("GridFunction: nodes must strictly increase");
}

GridFunction GridFunction::sample(const std::vector<double>& ts,
                                  const std::function<double(double)>& f) {
  std::vector<double> ys(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) ys[i] = f(ts[i]);
  return GridFunction(ts, std::move(ys));
}

GridFunction GridFunction::constant(const std::vector<double>& ts, double c) {
  return GridFunction(ts, std::vector<double>(ts.size(), c));
}

double GridFunction::eval(double t) const {
  if (ts_.size() == 1) {
    if (std::abs(t - ts_[0]) > 1e-12 * (1.0 + std::abs(ts_[0])))
      throw DomainError("eval: point outside single-node domain");
    return ys_[0];
  }
  if (t < ts_.front()) {
    if (ts_.front() - t > local_tol_dom(ts_, true))
      throw DomainError("eval: t below domain");
    return ys_.front();
  }
  if (t > ts_.back()) {
    if (t - ts_.back() > local_tol_dom(ts_, false))
      throw DomainError("eval: t above domain");
    return ys_.back();
  }
  return eval_clamped(t);
}

double GridFunction::eval_clamped(double t) const {
  if (ts_.size() == 1) return ys_[0];
  if (t <= ts_.front()) return ys_.front();
  if (t >= ts_.back()) return ys_.back();
  const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - ts_.begin()) - 1;
  const double u = (t - ts_[i]) / (ts_[i + 1] - ts_[i]);
  return ys_[i] + u * (ys_[i + 1] - ys_[i]);
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (double y : ys_) m = std::max(m, std::abs(y));
  return m;
}

bool GridFunction::same_grid(const GridFunction& other) const {
  return ts_ == other.ts_;
}

double eval(const GridFunction& g, double t) { return g.eval(t); }

bool partial_le(const GridFunction& g1, const GridFunction& g2, double tol) {
  require_same_grid(g1, g2, "partial_le");
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (g1.value(i) > g2.value(i) + tol) return false;
  return true;
}

double sup_distance(const GridFunction& g1, const GridFunction& g2) {
  require_same_grid(g1, g2, "sup_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < g1.size(); ++i)
    m = std::max(m, std::abs(g1.value(i) - g2.value(i)));
  return m;
}

bool is_nondecreasing_on(const GridFunction& g, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("is_nondecreasing_on: a > b");
  const double slack = 1e-9 * (1.0 + std::abs(a) + std::abs(b));
  if (a < g.front_time() - slack || b > g.back_time() + slack)
    throw DomainError("is_nondecreasing_on: [a,b] outside domain");
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.time(i);
    if (t < a - slack || t > b + slack) continue;
    if (have_prev && g.value(i) < prev - tol) return false;
    prev = g.value(i);
    have_prev = true;
  }
  return true;
}

GridFunction nodewise_max(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b, "nodewise_max");
  std::vector<double> ys(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ys[i] = std::max(a.value(i), b.value(i));
  return GridFunction(a.times(), std::move(ys));
}

GridFunction nodewise_min(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b, "nodewise_min");
  std::vector<double> ys(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ys[i] = std::min(a.value(i), b.value(i));
  return GridFunction(a.times(), std::move(ys));
}

double integral_trapezoid(const GridFunction& g) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    s += 0.5 * (g.value(i) + g.value(i + 1)) * (g.time(i + 1) - g.time(i));
  return s;
}

double integral_trapezoid_product(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b, "integral_trapezoid_product");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const double p0 = a.value(i) * b.value(i);
    const double p1 = a.value(i + 1) * b.value(i + 1);
    s += 0.5 * (p0 + p1) * (a.time(i + 1) - a.time(i));
  }
  return s;
}

GridFunction cumulative_trapezoid(const GridFunction& g) {
  std::vector<double> ys(g.size(), 0.0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    ys[i + 1] = ys[i] + 0.5 * (g.value(i) + g.value(i + 1)) * (g.time(i + 1) - g.time(i));
  return GridFunction(g.times(), std::move(ys));
}

GridFunction restrict_to(const GridFunction& g, double a, double b) {
  const double slack = 1e-9 * (1.0 + std::abs(a) + std::abs(b));
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.time(i) >= a - slack && g.time(i) <= b + slack) {
      ts.push_back(g.time(i));
      ys.push_back(g.value(i));
    }
  }
  if (ts.empty()) throw DomainError("restrict_to: no nodes in [a,b]");
  return GridFunction(std::move(ts), std::move(ys));
}

std::size_t t0_index(const GridFunction& g, const TimeDomain& d) {
  const auto& ts = g.times();
  const auto it = std::lower_bound(ts.begin(), ts.end(), d.t0 - 1e-12 * (1.0 + std::abs(d.t0)));
  if (it == ts.end() || std::abs(*it - d.t0) > 1e-12 * (1.0 + std::abs(d.t0)))
    throw DomainError("t0_index: t0 is not a node");
  return static_cast<std::size_t>(it - ts.begin());
}

double order_tolerance(const GridFunction& g) { return 1e-9 * (1.0 + g.sup_norm()); }

double order_tolerance(const GridFunction& a, const GridFunction& b) {
  return 1e-9 * (1.0 + std::max(a.sup_norm(), b.sup_norm()));
}

void write_csv(const GridFunction& g, std::ostream& os) {
  os << "t,value\n";
  char buf[64];
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", g.time(i), g.value(i));
    os << buf;
  }
}

GridFunction read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("read_csv: empty stream");
  std::vector<double> ts, ys;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("read_csv: malformed row");
    ts.push_back(std::stod(line.substr(0, comma)));
    ys.push_back(std::stod(line.substr(comma + 1)));
  }
  return GridFunction(std::move(ts), std::move(ys));
}

}  // namespace qsol
