// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/splits.hpp"

#include <algorithm>
#include <cmath>

#include "asrbench/errors.hpp"
#include "asrbench/rng.hpp"

namespace asrbench {

const char* split_name(Split s) {
  switch (s) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "?";
}

Split split_from_name(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev" || name == "validation") return Split::kDev;
  if (name == "test") return Split::kTest;
  throw SchemaError("unknown split token: '" + std::string(name) + "'");
}

std::array<int64_t, 3> split_targets(int64_t n,
                                     const std::array<double, 3>& ratios) {
  std::array<int64_t, 3> counts{};
  std::array<double, 3> remainders{};
  int64_t assigned = 0;
  for (size_t s = 0; s < 3; ++s) {
    double quota = static_cast<double>(n) * ratios[s];
    counts[s] = static_cast<int64_t>(std::floor(quota + 1e-9));
    remainders[s] = quota - static_cast<double>(counts[s]);
    assigned += counts[s];
  }
  // Hand out the leftover to the largest remainders; ties favor the
  // earlier split (train, dev, test).
  for (int64_t left = n - assigned; left > 0; --left) {
    size_t best = 0;
    for (size_t s = 1; s < 3; ++s)
      if (remainders[s] > remainders[best] + 1e-12) best = s;
    ++counts[best];
    remainders[best] -= 1.0;
  }
  return counts;
}

std::map<std::string, Split> assign_splits(
    const std::vector<std::string>& entity_ids, const SplitPlan& plan) {
  const double sum = plan.ratios[0] + plan.ratios[1] + plan.ratios[2];
  if (std::abs(sum - 1.0) > 1e-9)
    throw ConfigError("split ratios must sum to 1, got " +
                      std::to_string(sum));
  for (double r : plan.ratios)
    if (r < 0.0 || r > 1.0)
      throw ConfigError("split ratio out of [0,1]: " + std::to_string(r));
  if (entity_ids.empty())
    throw CurationError("assign_splits: empty entity list");

  struct Keyed {
    double unit;
    const std::string* id;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(entity_ids.size());
  for (const auto& id : entity_ids)
    keyed.push_back({hash_to_unit(stable_hash64(plan.seed, id)), &id});

  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.unit != b.unit) return a.unit < b.unit;
    return *a.id < *b.id;
  });
  for (size_t i = 1; i < keyed.size(); ++i)
    if (*keyed[i].id == *keyed[i - 1].id)
      throw CurationError("duplicate entity id: '" + *keyed[i].id + "'");

  const auto counts =
      split_targets(static_cast<int64_t>(keyed.size()), plan.ratios);

  std::map<std::string, Split> result;
  size_t pos = 0;
  for (size_t s = 0; s < 3; ++s) {
    for (int64_t k = 0; k < counts[s]; ++k, ++pos)
      result[*keyed[pos].id] = static_cast<Split>(s);
  }
  return result;
}

}  // namespace asrbench
