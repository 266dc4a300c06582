#include <set>
#include <string>

#include "sicache/analytics.h"
#include "sicache/errors.h"

namespace sicache {
namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

std::string DeltaLabel::to_string() const {
  if (!is_boundary()) return "d_" + std::to_string(region);
  return "d_{" + std::to_string(region) + "," + std::to_string(previous_region) +
         "}";
}

double within_region_delta(const LayerModel& layers, int n, int t) {
  return layers.region_slope(t) / n;
}

DifferenceTable difference_table(const LayerModel& layers, int n) {
  if (n < 1) throw DomainError("difference_table: n must be >= 1");
  DifferenceTable table;
  table.n = n;
  table.fot_values.resize(n + 1);
  for (int m = 0; m <= n; ++m) table.fot_values[m] = layers.fot(n, m);

  // Regions whose index set M_t = {m : ceil(n/m) = t} holds two or more
  // consecutive m, i.e. regions with a genuine within-region difference d_t.
  std::set<int> arithmetic_regions;
  for (int m = 2; m <= n; ++m) {
    if (ceil_div(n, m) == ceil_div(n, m - 1)) {
      arithmetic_regions.insert(ceil_div(n, m));
    }
  }

  std::set<DeltaLabel> distinct;
  table.deltas.reserve(n);
  table.labels.reserve(n);
  for (int m = 1; m <= n; ++m) {
    table.deltas.push_back(table.fot_values[m] - table.fot_values[m - 1]);
    DeltaLabel label;
    if (m == 1) {
      label = {n, n};
    } else {
      const int t = ceil_div(n, m);
      const int t_prev = ceil_div(n, m - 1);
      label = {t, t_prev};
      // m = n/t sits on the breakpoint 1/t of L(x). When m-1 lies in the
      // adjacent region t+1, the step coincides with that region's slope:
      // d_{t,t+1} - d_{t+1} = (1 - t m/n)(C_t - C_{t+1}) = 0.
      if (t_prev == t + 1 && m * t == n && arithmetic_regions.contains(t_prev)) {
        label = {t_prev, t_prev};
      }
    }
    table.labels.push_back(label);
    distinct.insert(label);
  }
  table.distinct_count = static_cast<int>(distinct.size());
  return table;
}

DifferenceTable difference_table(const ChannelModel& channel, int n) {
  return difference_table(LayerModel(channel), n);
}

}  // namespace sicache
