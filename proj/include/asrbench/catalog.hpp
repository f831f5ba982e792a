// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_CATALOG_HPP
#define ASRBENCH_CATALOG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench::catalog {

enum class Languages { kMonolingual, kMultilingual };
enum class SpeechType { kRead, kSpontaneous };
enum class InteractionType { kMonolog, kDialog };
enum class SpeechSource { kVolunteers, kCrowd, kPublicSpeakers };
enum class AcousticEnvironment { kQuiet, kMixed, kVarious };
enum class OriginalPartitioning { kNone, kTrainTestDev };
enum class SplitEntity {
  kAudioFileId,
  kSessionSpeakerId,
  kRecordingId,
  kNotApplicable
};

// Known license tokens. Future licenses ride along as "other:<text>" and
// validate with a warning instead of an error.
bool is_known_license(std::string_view token);

// Per-dataset survey metadata. Optional fields mirror empty catalog cells
// (the survey does not cover every attribute for every dataset).
struct CatalogEntry {
  std::string dataset_codename;
  std::string display_name;
  std::string license;
  std::optional<Languages> languages;
  std::string domain;  // free tag: open domain, audiobook, commands, ...
  std::optional<SpeechType> speech_type;
  std::optional<InteractionType> interaction_type;
  std::optional<SpeechSource> speech_source;
  std::optional<AcousticEnvironment> acoustic_environment;
  std::string audio_device;  // free tag
  std::optional<double> transcribed_hours;
  std::optional<int64_t> sample_count;
  std::optional<int64_t> speaker_count;
  std::optional<OriginalPartitioning> original_partitioning;
  std::optional<SplitEntity> split_entity;
};

struct Violation {
  enum class Severity { kError, kWarning };
  std::string codename;
  std::string field;
  std::string message;
  Severity severity = Severity::kError;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const;  // no error-severity violations
  size_t error_count() const;
  size_t warning_count() const;
};

struct CatalogSummary {
  size_t entry_count = 0;
  double total_hours = 0.0;
  int64_t total_samples = 0;
  int64_t total_speakers = 0;
  std::map<std::string, size_t> per_license;
  std::map<std::string, size_t> per_speech_type;
};

// `catalog.tsv`: header row with the field names in declaration order, one
// row per dataset, empty cell = N/A. Unknown enum tokens raise SchemaError
// naming the token; a missing file raises IoError with the path.
std::vector<CatalogEntry> parse_catalog(const std::filesystem::path& path);
std::vector<CatalogEntry> parse_catalog_text(std::string_view text);
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

// Checks every entry invariant; an empty report means valid. Pure.
ValidationReport validate_catalog(const std::vector<CatalogEntry>& entries);

// Column totals and per-enum counts. Entries are summed in codename order
// so the result is invariant under input permutation.
CatalogSummary summarize_catalog(const std::vector<CatalogEntry>& entries);

// Codename pattern: creator-name-yy or creator-name-unk (lowercase,
// hyphen/underscore separated).
bool codename_valid(std::string_view codename);

}  // namespace asrbench::catalog

#endif  // ASRBENCH_CATALOG_HPP
