// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_CURATION_HPP
#define ASRBENCH_CURATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "asrbench/audio_curate.hpp"
#include "asrbench/config.hpp"
#include "asrbench/encoding.hpp"
#include "asrbench/manifest.hpp"
#include "asrbench/splits.hpp"
#include "asrbench/textnorm.hpp"

namespace asrbench::curation {

enum class TranscriptFormat { kPerFileText, kTsvColumn, kTimeAligned };
TranscriptFormat transcript_format_from_name(std::string_view name);

// Declarative mapping from a raw dataset drop to the standard manifest.
struct AdapterConfig {
  std::string dataset;  // codename; names the manifest and audio tree
  std::filesystem::path dataset_dir;
  std::string audio_glob = "audio/*.wav";
  TranscriptFormat transcript_format = TranscriptFormat::kTsvColumn;
  std::string transcript_file = "transcripts.tsv";
  encoding::Source source_encoding = encoding::Source::kUtf8;
  std::string speaker_pattern;  // regex, capture group 1 over the file stem
  SplitPlan split_plan;
  audio::AudioTarget audio_target;
  int workers = 0;  // 0 = hardware concurrency

  // Built from the [curation] section; resolves relative paths.
  static AdapterConfig from_config(const Config& cfg);
};

struct CurationLogEntry {
  std::string source;  // path relative to the dataset dir
  std::string reason;
};

struct CurationResult {
  std::filesystem::path manifest_path;
  size_t record_count = 0;
  size_t excluded_count = 0;
  std::vector<CurationLogEntry> log;
};

// Converts a raw drop into out_dir/{dataset}.jsonl plus the curated audio
// tree out_dir/data/{dataset}/{split}/{audioname}.wav. Undecodable or
// sub-8kHz audio is excluded and logged; orphaned audio/transcripts and
// failed encoding conversion abort with CurationError. `spoken_norm`
// produces ref_spoken from ref_orig.
CurationResult build_manifest(const AdapterConfig& cfg,
                              const std::filesystem::path& out_dir,
                              const textnorm::NormalizationConfig& spoken_norm);

// Simple '*' glob over paths relative to a root ("audio/*.wav").
std::vector<std::filesystem::path> glob_files(
    const std::filesystem::path& root, const std::string& pattern);

}  // namespace asrbench::curation

#endif  // ASRBENCH_CURATION_HPP
