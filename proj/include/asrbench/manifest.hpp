// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_MANIFEST_HPP
#define ASRBENCH_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "asrbench/splits.hpp"

namespace asrbench {

// CommonVoice-style speaker metadata; kNA serializes as the literal "N/A".
enum class Gender { kMale, kFemale, kOther, kNA };
enum class AgeGroup {
  kTeens,
  kTwenties,
  kThirties,
  kFourties,
  kFifties,
  kSixties,
  kSeventies,
  kEightiesPlus,
  kNA
};

const char* gender_name(Gender g);
Gender gender_from_token(std::string_view token);  // lenient: unknown -> kNA
const char* age_name(AgeGroup a);
// Accepts CommonVoice decade labels or a bare number of years; anything
// unmappable collapses to kNA.
AgeGroup age_from_token(std::string_view token);
// Display label used by the age-group tables ("20s", "30s", ...).
std::string age_display(AgeGroup a);

// One row of the standardized manifest.
struct UtteranceRecord {
  std::string audioname;
  Split split = Split::kTrain;
  std::string dataset;
  std::string ref_orig;
  std::string ref_spoken;
  std::string ref_written;
  int sampling_rate = 16000;
  int samplingrate_orig = 0;
  std::string speaker_id;
  std::string audiopath_bigos;
  std::string audiopath_local;  // "N/A" in files; resolved at load time
  int64_t audio_duration_samples = 0;
  double audio_duration_seconds = 0.0;
  Gender speaker_gender = Gender::kNA;
  AgeGroup speaker_age = AgeGroup::kNA;
  double speech_rate_words = 0.0;
  double speech_rate_chars = 0.0;
  int64_t utterance_length_words = 0;
  int64_t utterance_length_chars = 0;
};

// `{dataset}-{split}-{speaker_id}-{seq:05}`.
std::string make_audioname(const std::string& dataset, Split split,
                           const std::string& speaker_id, int seq);

// Fills utterance_length_words/chars and speech_rate_words/chars from
// ref_orig and the duration fields. Lengths count whitespace-delimited
// tokens and non-whitespace codepoints. Throws CurationError when the
// duration is zero but the transcript is not empty (rates undefined).
void derive_metadata(UtteranceRecord& record);

// Row-level invariant check; returns human-readable violations (empty when
// the record is consistent). Uniqueness is checked at manifest level.
std::vector<std::string> validate_record(const UtteranceRecord& record);
std::vector<std::string> validate_manifest(
    const std::vector<UtteranceRecord>& records);

// Line-delimited JSON with the field names above in declaration order;
// "N/A" for unavailable values. serialize(parse(x)) is byte-identical.
std::string serialize_record(const UtteranceRecord& record);
UtteranceRecord parse_record(std::string_view line);

std::string serialize_manifest(const std::vector<UtteranceRecord>& records);
std::vector<UtteranceRecord> parse_manifest_text(std::string_view text);
std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path);

// Sets audiopath_local to base_dir/audiopath_bigos for every record.
void resolve_audio_paths(std::vector<UtteranceRecord>& records,
                         const std::filesystem::path& base_dir);

}  // namespace asrbench

#endif  // ASRBENCH_MANIFEST_HPP
