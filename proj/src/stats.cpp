// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/stats.hpp"

#include <algorithm>
#include <cmath>

#include "asrbench/errors.hpp"

namespace asrbench {

Stats describe(const std::vector<double>& values) {
  if (values.empty()) throw MetricError("describe: empty value list");
  Stats s;
  s.count = values.size();

  double sum = 0.0;
  s.min = values[0];
  s.max = values[0];
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(s.count);
  s.range = s.max - s.min;

  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  size_t n = sorted.size();
  s.median = (n % 2 == 1) ? sorted[n / 2]
                          : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  if (n >= 2) {
    double ss = 0.0;
    for (double v : values) {
      double d = v - s.mean;
      ss += d * d;
    }
    s.sample_std = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw MetricError("quantile: empty value list");
  if (sorted.size() == 1) return sorted[0];
  double pos = q * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<size_t>(std::floor(pos));
  auto hi = static_cast<size_t>(std::ceil(pos));
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxSummary box_summary(std::vector<double> values) {
  if (values.empty()) throw MetricError("box_summary: empty value list");
  std::sort(values.begin(), values.end());
  BoxSummary b;
  b.q1 = quantile_sorted(values, 0.25);
  b.median = quantile_sorted(values, 0.5);
  b.q3 = quantile_sorted(values, 0.75);
  double iqr = b.q3 - b.q1;
  double lo_fence = b.q1 - 1.5 * iqr;
  double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.q3;
  b.whisker_hi = b.q1;
  bool any_in = false;
  for (double v : values) {
    if (v < lo_fence || v > hi_fence) {
      b.outliers.push_back(v);
    } else {
      if (!any_in) {
        b.whisker_lo = v;
        any_in = true;
      }
      b.whisker_hi = v;
    }
  }
  if (!any_in) {
    // Degenerate: every point flagged; collapse whiskers onto the box.
    b.whisker_lo = b.q1;
    b.whisker_hi = b.q3;
  }
  return b;
}

}  // namespace asrbench
