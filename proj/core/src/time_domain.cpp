#include "qsol/time_domain.hpp"

#include <cmath>
#include <string>

#include "qsol/errors.hpp"

namespace qsol {

void TimeDomain::validate() const {
  if (!(length > 0.0)) throw DomainError("TimeDomain: length must be > 0");
  if (!(history >= 0.0)) throw DomainError("TimeDomain: history must be >= 0");
  if (!(monotone_span >= 0.0) || monotone_span > history + 1e-15)
    throw DomainError("TimeDomain: monotone_span must lie in [0, history]");
}

std::vector<double> grid_nodes(const TimeDomain& d, double h, std::size_t* t0_index) {
  d.validate();
  if (!(h > 0.0)) throw DomainError("grid_nodes: step must be > 0");

  std::size_t n_minus = 0;
  if (d.history > 0.0) {
    n_minus = static_cast<std::size_t>(std::llround(d.history / h));
    if (n_minus < 1) n_minus = 1;
  }
  std::size_t n_plus = static_cast<std::size_t>(std::llround(d.length / h));
  if (n_plus < 1) n_plus = 1;

  std::vector<double> ts;
  ts.reserve(n_minus + n_plus + 1);
  if (n_minus > 0) {
    const double hm = d.history / static_cast<double>(n_minus);
    for (std::size_t j = 0; j < n_minus; ++j)
      ts.push_back(d.t_min() + static_cast<double>(j) * hm);
    ts.front() = d.t_min();
  }
  const double hp = d.length / static_cast<double>(n_plus);
  for (std::size_t i = 0; i <= n_plus; ++i)
    ts.push_back(d.t0 + static_cast<double>(i) * hp);
  ts.back() = d.t_max();

  if (t0_index) *t0_index = n_minus;
  return ts;
}

std::vector<double> grid_nodes_forward(const TimeDomain& d, double h) {
  TimeDomain fwd{d.t0, d.length, 0.0, 0.0};
  return grid_nodes(fwd, h);
}

}  // namespace qsol
