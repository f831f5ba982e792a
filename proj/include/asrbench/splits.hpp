// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_SPLITS_HPP
#define ASRBENCH_SPLITS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench {

enum class Split { kTrain, kDev, kTest };

const char* split_name(Split s);
Split split_from_name(std::string_view name);  // throws SchemaError

enum class SplitMode { kPreserveOriginal, kPseudorandom };

enum class SplitEntityKind { kAudioFileId, kSessionSpeakerId, kRecordingId };

struct SplitPlan {
  SplitMode mode = SplitMode::kPseudorandom;
  SplitEntityKind entity = SplitEntityKind::kSessionSpeakerId;
  // train/dev/test fractions; must sum to 1 at 1e-9.
  std::array<double, 3> ratios = {0.8, 0.1, 0.1};
  uint64_t seed = 0;
};

// Deterministic pseudorandom split assignment. Entities are ordered by a
// stable hash of (seed, id) and filled into train/dev/test counts from a
// largest-remainder allocation, so the result is independent of input
// order, every realized count is within one entity of ratio*n, and
// utterances sharing an entity always land in the same split.
// Throws CurationError on duplicate ids, ConfigError on bad ratios.
std::map<std::string, Split> assign_splits(
    const std::vector<std::string>& entity_ids, const SplitPlan& plan);

// Largest-remainder integer allocation of n across the ratios.
std::array<int64_t, 3> split_targets(int64_t n,
                                     const std::array<double, 3>& ratios);

}  // namespace asrbench

#endif  // ASRBENCH_SPLITS_HPP
