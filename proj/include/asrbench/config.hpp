// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_CONFIG_HPP
#define ASRBENCH_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench {

// Toolkit configuration: UTF-8 key-value document with [section] headers,
// `key = value` lines and '#' comments. Unknown keys are config errors so
// typos surface instead of silently using defaults.
struct Config {
  // [curation]
  std::string dataset;
  std::string dataset_dir;  // relative paths resolve against the config file
  std::string audio_glob = "audio/*.wav";
  std::string transcript_format = "tsv-column";
  std::string transcript_file = "transcripts.tsv";
  std::string source_encoding = "utf-8";
  std::string speaker_pattern;
  std::string split_mode = "pseudorandom";
  std::string split_entity = "session-speaker-id";
  std::string split_ratios = "0.8,0.1,0.1";
  uint64_t split_seed = 0;

  // [normalization]
  std::string norm_methods = "all";
  std::string lexicon_file;
  std::string tag_pattern = "<[^<>]+>";

  // [buckets]
  std::string duration_edges = "0,2,5,10,30";
  std::string speech_rate_edges = "0,1.5,5";

  // [gateway]
  std::string cache_dir = "cache";
  int retries = 3;
  double rate_limit_per_s = 0.0;  // 0 disables the limiter
  double http_timeout_s = 30.0;
  double missing_fraction = 0.0;

  // [report]
  int decimals = 2;
  int workers = 0;  // 0 = hardware concurrency

  // Directory of the config file, for resolving relative paths; "." when
  // defaults are used.
  std::filesystem::path base_dir = ".";

  static Config load(const std::filesystem::path& path);
  static Config parse(std::string_view text);

  // Full document with every current value; the --print-config output.
  std::string print() const;

  std::filesystem::path resolve(const std::string& rel) const;

  std::vector<double> parsed_ratios() const;         // throws ConfigError
  std::vector<double> parsed_duration_edges() const;
  std::vector<double> parsed_speech_rate_edges() const;
};

}  // namespace asrbench

#endif  // ASRBENCH_CONFIG_HPP
