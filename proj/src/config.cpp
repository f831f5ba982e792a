// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/config.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"

namespace asrbench {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<double> parse_doubles(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad ") + what + " value: '" + part +
                        "'");
    }
  }
  return out;
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  // section.key -> setter
  std::map<std::string, std::function<void(const std::string&)>> setters;
  auto bind_str = [&setters](const char* key, std::string& field) {
    setters[key] = [&field](const std::string& v) { field = v; };
  };
  auto bind_int = [&setters](const char* key, auto& field) {
    setters[key] = [&field, key](const std::string& v) {
      long long parsed = 0;
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), parsed);
      if (ec != std::errc() || p != v.data() + v.size())
        throw ConfigError(std::string("bad integer for ") + key + ": '" + v +
                          "'");
      field = static_cast<std::decay_t<decltype(field)>>(parsed);
    };
  };
  auto bind_double = [&setters](const char* key, double& field) {
    setters[key] = [&field, key](const std::string& v) {
      try {
        size_t used = 0;
        field = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw ConfigError(std::string("bad number for ") + key + ": '" + v +
                          "'");
      }
    };
  };

  bind_str("curation.dataset", cfg.dataset);
  bind_str("curation.dataset_dir", cfg.dataset_dir);
  bind_str("curation.audio_glob", cfg.audio_glob);
  bind_str("curation.transcript_format", cfg.transcript_format);
  bind_str("curation.transcript_file", cfg.transcript_file);
  bind_str("curation.source_encoding", cfg.source_encoding);
  bind_str("curation.speaker_pattern", cfg.speaker_pattern);
  bind_str("curation.split_mode", cfg.split_mode);
  bind_str("curation.split_entity", cfg.split_entity);
  bind_str("curation.split_ratios", cfg.split_ratios);
  bind_int("curation.split_seed", cfg.split_seed);
  bind_str("normalization.methods", cfg.norm_methods);
  bind_str("normalization.lexicon", cfg.lexicon_file);
  bind_str("normalization.tag_pattern", cfg.tag_pattern);
  bind_str("buckets.duration_edges", cfg.duration_edges);
  bind_str("buckets.speech_rate_edges", cfg.speech_rate_edges);
  bind_str("gateway.cache_dir", cfg.cache_dir);
  bind_int("gateway.retries", cfg.retries);
  bind_double("gateway.rate_limit_per_s", cfg.rate_limit_per_s);
  bind_double("gateway.http_timeout_s", cfg.http_timeout_s);
  bind_double("gateway.missing_fraction", cfg.missing_fraction);
  bind_int("report.decimals", cfg.decimals);
  bind_int("report.workers", cfg.workers);

  std::istringstream in{std::string(text)};
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    std::string full = section.empty() ? key : section + "." + key;
    auto it = setters.find(full);
    if (it == setters.end())
      throw ConfigError("unknown config key '" + full + "' (line " +
                        std::to_string(lineno) + ")");
    it->second(value);
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  Config cfg = parse(fsutil::read_file(path));
  cfg.base_dir = path.has_parent_path() ? path.parent_path()
                                        : std::filesystem::path(".");
  return cfg;
}

std::string Config::print() const {
  std::ostringstream out;
  out << "[curation]\n";
  out << "dataset = " << dataset << "\n";
  out << "dataset_dir = " << dataset_dir << "\n";
  out << "audio_glob = " << audio_glob << "\n";
  out << "transcript_format = " << transcript_format << "\n";
  out << "transcript_file = " << transcript_file << "\n";
  out << "source_encoding = " << source_encoding << "\n";
  out << "speaker_pattern = " << speaker_pattern << "\n";
  out << "split_mode = " << split_mode << "\n";
  out << "split_entity = " << split_entity << "\n";
  out << "split_ratios = " << split_ratios << "\n";
  out << "split_seed = " << split_seed << "\n";
  out << "\n[normalization]\n";
  out << "methods = " << norm_methods << "\n";
  out << "lexicon = " << lexicon_file << "\n";
  out << "tag_pattern = " << tag_pattern << "\n";
  out << "\n[buckets]\n";
  out << "duration_edges = " << duration_edges << "\n";
  out << "speech_rate_edges = " << speech_rate_edges << "\n";
  out << "\n[gateway]\n";
  out << "cache_dir = " << cache_dir << "\n";
  out << "retries = " << retries << "\n";
  out << "rate_limit_per_s = " << rate_limit_per_s << "\n";
  out << "http_timeout_s = " << http_timeout_s << "\n";
  out << "missing_fraction = " << missing_fraction << "\n";
  out << "\n[report]\n";
  out << "decimals = " << decimals << "\n";
  out << "workers = " << workers << "\n";
  return out.str();
}

std::filesystem::path Config::resolve(const std::string& rel) const {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p;
  return base_dir / p;
}

std::vector<double> Config::parsed_ratios() const {
  auto r = parse_doubles(split_ratios, "split_ratios");
  if (r.size() != 3)
    throw ConfigError("split_ratios must have exactly 3 values");
  return r;
}

std::vector<double> Config::parsed_duration_edges() const {
  return parse_doubles(duration_edges, "duration_edges");
}

std::vector<double> Config::parsed_speech_rate_edges() const {
  return parse_doubles(speech_rate_edges, "speech_rate_edges");
}

}  // namespace asrbench
