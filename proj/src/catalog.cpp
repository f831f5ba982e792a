// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"
#include "asrbench/tsv.hpp"

namespace asrbench::catalog {

namespace {

constexpr std::array<const char*, 15> kColumns = {
    "dataset_codename", "display_name",      "license",
    "languages",        "domain",            "speech_type",
    "interaction_type", "speech_source",     "acoustic_environment",
    "audio_device",     "transcribed_hours", "sample_count",
    "speaker_count",    "original_partitioning", "split_entity"};

constexpr std::array<const char*, 7> kLicenses = {
    "CC-0",        "CC-BY",       "CC-BY-SA", "CC-BY-NC",
    "CC-BY-NC-ND", "public-domain", "proprietary"};

template <typename Enum>
struct Token {
  const char* name;
  Enum value;
};

constexpr Token<Languages> kLanguages[] = {
    {"monolingual", Languages::kMonolingual},
    {"multilingual", Languages::kMultilingual}};
constexpr Token<SpeechType> kSpeechTypes[] = {
    {"read", SpeechType::kRead}, {"spontaneous", SpeechType::kSpontaneous}};
constexpr Token<InteractionType> kInteractionTypes[] = {
    {"monolog", InteractionType::kMonolog},
    {"dialog", InteractionType::kDialog}};
constexpr Token<SpeechSource> kSpeechSources[] = {
    {"volunteers", SpeechSource::kVolunteers},
    {"crowd", SpeechSource::kCrowd},
    {"public-speakers", SpeechSource::kPublicSpeakers}};
constexpr Token<AcousticEnvironment> kEnvironments[] = {
    {"quiet", AcousticEnvironment::kQuiet},
    {"mixed", AcousticEnvironment::kMixed},
    {"various", AcousticEnvironment::kVarious}};
constexpr Token<OriginalPartitioning> kPartitionings[] = {
    {"none", OriginalPartitioning::kNone},
    {"train-test-dev", OriginalPartitioning::kTrainTestDev}};
constexpr Token<SplitEntity> kSplitEntities[] = {
    {"audio-file-id", SplitEntity::kAudioFileId},
    {"session-speaker-id", SplitEntity::kSessionSpeakerId},
    {"recording-id", SplitEntity::kRecordingId},
    {"not-applicable", SplitEntity::kNotApplicable}};

template <typename Enum, size_t N>
std::optional<Enum> parse_enum(const std::string& cell,
                               const Token<Enum> (&tokens)[N],
                               const char* field) {
  if (cell.empty()) return std::nullopt;
  for (const auto& t : tokens)
    if (cell == t.name) return t.value;
  throw SchemaError(std::string("unknown ") + field + " token: '" + cell +
                    "'");
}

template <typename Enum, size_t N>
std::string enum_token(std::optional<Enum> v, const Token<Enum> (&tokens)[N]) {
  if (!v) return "";
  for (const auto& t : tokens)
    if (*v == t.value) return t.name;
  return "";
}

std::optional<double> parse_hours(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw SchemaError("bad decimal value: '" + cell + "'");
  return v;
}

std::optional<int64_t> parse_count(const std::string& cell,
                                   const char* field) {
  if (cell.empty()) return std::nullopt;
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw SchemaError(std::string("bad ") + field + " value: '" + cell + "'");
  return v;
}

// Shortest decimal form that keeps the catalog diff-friendly: integers stay
// integers, fractions print as written (two decimals suffice for hours).
std::string format_hours(double v) {
  std::ostringstream out;
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    out << static_cast<int64_t>(v);
  } else {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
  }
  return out.str();
}

}  // namespace

bool is_known_license(std::string_view token) {
  return std::any_of(kLicenses.begin(), kLicenses.end(),
                     [&](const char* l) { return token == l; });
}

bool codename_valid(std::string_view codename) {
  // creator-name-yy | creator-name-unk; groups of [a-z0-9_], at least
  // creator and name before the suffix.
  std::vector<std::string_view> groups;
  size_t start = 0;
  while (true) {
    size_t dash = codename.find('-', start);
    if (dash == std::string_view::npos) {
      groups.push_back(codename.substr(start));
      break;
    }
    groups.push_back(codename.substr(start, dash - start));
    start = dash + 1;
  }
  if (groups.size() < 3) return false;
  for (size_t i = 0; i + 1 < groups.size(); ++i) {
    const auto& g = groups[i];
    if (g.empty()) return false;
    for (char c : g)
      if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'))
        return false;
  }
  const auto& suffix = groups.back();
  if (suffix == "unk") return true;
  return suffix.size() == 2 && suffix[0] >= '0' && suffix[0] <= '9' &&
         suffix[1] >= '0' && suffix[1] <= '9';
}

std::vector<CatalogEntry> parse_catalog_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(tsv::split_line(line));
  }
  if (rows.empty()) throw SchemaError("catalog: missing header row");

  const auto& header = rows.front();
  if (header.size() != kColumns.size())
    throw SchemaError("catalog: expected " + std::to_string(kColumns.size()) +
                      " columns, got " + std::to_string(header.size()));
  for (size_t i = 0; i < kColumns.size(); ++i)
    if (header[i] != kColumns[i])
      throw SchemaError("catalog: column " + std::to_string(i) +
                        " must be '" + kColumns[i] + "', got '" + header[i] +
                        "'");

  std::vector<CatalogEntry> entries;
  for (size_t r = 1; r < rows.size(); ++r) {
    auto cells = rows[r];
    cells.resize(kColumns.size());
    CatalogEntry e;
    e.dataset_codename = cells[0];
    e.display_name = cells[1];
    e.license = cells[2];
    if (!e.license.empty() && !is_known_license(e.license) &&
        e.license.rfind("other:", 0) != 0)
      throw SchemaError("unknown license token: '" + e.license + "'");
    e.languages = parse_enum(cells[3], kLanguages, "languages");
    e.domain = cells[4];
    e.speech_type = parse_enum(cells[5], kSpeechTypes, "speech_type");
    e.interaction_type =
        parse_enum(cells[6], kInteractionTypes, "interaction_type");
    e.speech_source = parse_enum(cells[7], kSpeechSources, "speech_source");
    e.acoustic_environment =
        parse_enum(cells[8], kEnvironments, "acoustic_environment");
    e.audio_device = cells[9];
    e.transcribed_hours = parse_hours(cells[10]);
    e.sample_count = parse_count(cells[11], "sample_count");
    e.speaker_count = parse_count(cells[12], "speaker_count");
    e.original_partitioning =
        parse_enum(cells[13], kPartitionings, "original_partitioning");
    e.split_entity = parse_enum(cells[14], kSplitEntities, "split_entity");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> parse_catalog(const std::filesystem::path& path) {
  return parse_catalog_text(fsutil::read_file(path));
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  for (size_t i = 0; i < kColumns.size(); ++i)
    out << (i ? "\t" : "") << kColumns[i];
  out << '\n';
  for (const auto& e : entries) {
    std::vector<std::string> cells = {
        e.dataset_codename,
        e.display_name,
        e.license,
        enum_token(e.languages, kLanguages),
        e.domain,
        enum_token(e.speech_type, kSpeechTypes),
        enum_token(e.interaction_type, kInteractionTypes),
        enum_token(e.speech_source, kSpeechSources),
        enum_token(e.acoustic_environment, kEnvironments),
        e.audio_device,
        e.transcribed_hours ? format_hours(*e.transcribed_hours) : "",
        e.sample_count ? std::to_string(*e.sample_count) : "",
        e.speaker_count ? std::to_string(*e.speaker_count) : "",
        enum_token(e.original_partitioning, kPartitionings),
        enum_token(e.split_entity, kSplitEntities)};
    out << tsv::join_line(cells) << '\n';
  }
  return out.str();
}

bool ValidationReport::valid() const { return error_count() == 0; }

size_t ValidationReport::error_count() const {
  size_t n = 0;
  for (const auto& v : violations)
    if (v.severity == Violation::Severity::kError) ++n;
  return n;
}

size_t ValidationReport::warning_count() const {
  return violations.size() - error_count();
}

ValidationReport validate_catalog(const std::vector<CatalogEntry>& entries) {
  ValidationReport report;
  auto err = [&report](const CatalogEntry& e, const char* field,
                       std::string msg) {
    report.violations.push_back(
        {e.dataset_codename, field, std::move(msg),
         Violation::Severity::kError});
  };
  auto warn = [&report](const CatalogEntry& e, const char* field,
                        std::string msg) {
    report.violations.push_back(
        {e.dataset_codename, field, std::move(msg),
         Violation::Severity::kWarning});
  };

  std::map<std::string, size_t> seen;
  for (const auto& e : entries) {
    if (!codename_valid(e.dataset_codename))
      err(e, "dataset_codename",
          "codename must match creator-name-yy or creator-name-unk");
    if (++seen[e.dataset_codename] == 2)
      err(e, "dataset_codename", "duplicate codename");

    if (!e.license.empty() && !is_known_license(e.license))
      warn(e, "license", "unrecognized license escape '" + e.license + "'");

    if (e.original_partitioning == OriginalPartitioning::kTrainTestDev &&
        e.split_entity && *e.split_entity != SplitEntity::kNotApplicable)
      err(e, "split_entity",
          "split_entity must be not-applicable when original splits are "
          "preserved");

    if (e.transcribed_hours && *e.transcribed_hours < 0)
      err(e, "transcribed_hours", "must be non-negative");
    if (e.sample_count && *e.sample_count < 0)
      err(e, "sample_count", "must be non-negative");
    if (e.speaker_count && *e.speaker_count < 0)
      err(e, "speaker_count", "must be non-negative");

    if (e.transcribed_hours && e.sample_count) {
      bool has_hours = *e.transcribed_hours > 0;
      bool has_samples = *e.sample_count > 0;
      if (has_hours != has_samples)
        err(e, has_hours ? "sample_count" : "transcribed_hours",
            "transcribed_hours > 0 iff sample_count > 0");
    }
  }
  return report;
}

CatalogSummary summarize_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<const CatalogEntry*> sorted;
  sorted.reserve(entries.size());
  for (const auto& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const CatalogEntry* a, const CatalogEntry* b) {
              return a->dataset_codename < b->dataset_codename;
            });

  CatalogSummary s;
  s.entry_count = entries.size();
  for (const auto* e : sorted) {
    if (e->transcribed_hours) s.total_hours += *e->transcribed_hours;
    if (e->sample_count) s.total_samples += *e->sample_count;
    if (e->speaker_count) s.total_speakers += *e->speaker_count;
    if (!e->license.empty()) ++s.per_license[e->license];
    if (e->speech_type)
      ++s.per_speech_type[e->speech_type == SpeechType::kRead
                              ? "read"
                              : "spontaneous"];
  }
  return s;
}

}  // namespace asrbench::catalog
