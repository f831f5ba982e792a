// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_STATS_HPP
#define ASRBENCH_STATS_HPP

#include <optional>
#include <vector>

namespace asrbench {

struct Stats {
  size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  // Sample standard deviation (n-1 denominator); absent for n < 2.
  std::optional<double> sample_std;
  double min = 0.0;
  double max = 0.0;
  double range = 0.0;
};

// Descriptive statistics over >= 1 values. Median uses the midpoint
// convention for even n. Throws MetricError on an empty input.
Stats describe(const std::vector<double>& values);

// Tukey box-plot summary: quartiles by linear interpolation over the sorted
// sample, whiskers at the most extreme points within 1.5*IQR of the box.
struct BoxSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers;
};

BoxSummary box_summary(std::vector<double> values);

// Linear-interpolation quantile (R type 7) over a sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double q);

}  // namespace asrbench

#endif  // ASRBENCH_STATS_HPP
