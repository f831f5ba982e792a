// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/manifest.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"
#include "asrbench/utf8.hpp"

namespace asrbench {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kNA = "N/A";

struct AgeToken {
  const char* token;
  AgeGroup value;
};

constexpr AgeToken kAgeTokens[] = {
    {"teens", AgeGroup::kTeens},       {"twenties", AgeGroup::kTwenties},
    {"thirties", AgeGroup::kThirties}, {"fourties", AgeGroup::kFourties},
    {"fifties", AgeGroup::kFifties},   {"sixties", AgeGroup::kSixties},
    {"seventies", AgeGroup::kSeventies},
    {"eighties+", AgeGroup::kEightiesPlus}};

}  // namespace

const char* gender_name(Gender g) {
  switch (g) {
    case Gender::kMale:
      return "male";
    case Gender::kFemale:
      return "female";
    case Gender::kOther:
      return "other";
    case Gender::kNA:
      return kNA;
  }
  return kNA;
}

Gender gender_from_token(std::string_view token) {
  std::string low = utf8::lower(token);
  if (low == "male" || low == "m") return Gender::kMale;
  if (low == "female" || low == "f") return Gender::kFemale;
  if (low == "other") return Gender::kOther;
  return Gender::kNA;
}

const char* age_name(AgeGroup a) {
  for (const auto& t : kAgeTokens)
    if (t.value == a) return t.token;
  return kNA;
}

AgeGroup age_from_token(std::string_view token) {
  std::string low = utf8::lower(token);
  for (const auto& t : kAgeTokens)
    if (low == t.token) return t.value;
  // CommonVoice's own labels stop at nineties; everything 80+ pools here.
  if (low == "eighties" || low == "nineties") return AgeGroup::kEightiesPlus;
  int years = 0;
  auto [ptr, ec] = std::from_chars(low.data(), low.data() + low.size(), years);
  if (ec == std::errc() && ptr == low.data() + low.size()) {
    if (years >= 80) return AgeGroup::kEightiesPlus;
    if (years >= 70) return AgeGroup::kSeventies;
    if (years >= 60) return AgeGroup::kSixties;
    if (years >= 50) return AgeGroup::kFifties;
    if (years >= 40) return AgeGroup::kFourties;
    if (years >= 30) return AgeGroup::kThirties;
    if (years >= 20) return AgeGroup::kTwenties;
    if (years >= 13) return AgeGroup::kTeens;
  }
  return AgeGroup::kNA;
}

std::string age_display(AgeGroup a) {
  switch (a) {
    case AgeGroup::kTeens:
      return "10s";
    case AgeGroup::kTwenties:
      return "20s";
    case AgeGroup::kThirties:
      return "30s";
    case AgeGroup::kFourties:
      return "40s";
    case AgeGroup::kFifties:
      return "50s";
    case AgeGroup::kSixties:
      return "60s";
    case AgeGroup::kSeventies:
      return "70s";
    case AgeGroup::kEightiesPlus:
      return "80s+";
    case AgeGroup::kNA:
      return kNA;
  }
  return kNA;
}

std::string make_audioname(const std::string& dataset, Split split,
                           const std::string& speaker_id, int seq) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%05d", seq);
  return dataset + "-" + split_name(split) + "-" + speaker_id + "-" + buf;
}

void derive_metadata(UtteranceRecord& r) {
  const auto tokens = utf8::split_ws(r.ref_orig);
  r.utterance_length_words = static_cast<int64_t>(tokens.size());

  int64_t chars = 0;
  size_t i = 0;
  while (i < r.ref_orig.size()) {
    if (!utf8::is_space(utf8::decode(r.ref_orig, i))) ++chars;
  }
  r.utterance_length_chars = chars;

  if (r.audio_duration_seconds <= 0.0) {
    if (r.utterance_length_words > 0)
      throw CurationError("derive_metadata: zero duration with non-empty "
                          "transcript for '" + r.audioname + "'");
    r.speech_rate_words = 0.0;
    r.speech_rate_chars = 0.0;
    return;
  }
  r.speech_rate_words = static_cast<double>(r.utterance_length_words) /
                        r.audio_duration_seconds;
  r.speech_rate_chars = static_cast<double>(r.utterance_length_chars) /
                        r.audio_duration_seconds;
}

std::vector<std::string> validate_record(const UtteranceRecord& r) {
  std::vector<std::string> v;
  auto fail = [&v, &r](const std::string& msg) {
    v.push_back(r.audioname + ": " + msg);
  };

  if (r.audioname.empty()) fail("empty audioname");
  if (r.sampling_rate != 16000)
    fail("sampling_rate must be 16000 after curation");
  if (r.samplingrate_orig < 8000) fail("samplingrate_orig below 8000");
  if (r.audio_duration_samples < 0) fail("negative duration_samples");

  const double expected_samples =
      r.audio_duration_seconds * static_cast<double>(r.sampling_rate);
  if (std::abs(expected_samples -
               static_cast<double>(r.audio_duration_samples)) > 1.0 + 1e-6)
    fail("duration_seconds * sampling_rate != duration_samples");

  const auto ref_words =
      static_cast<int64_t>(utf8::split_ws(r.ref_orig).size());
  if (ref_words != r.utterance_length_words)
    fail("utterance_length_words does not match ref_orig");

  if (r.audio_duration_seconds > 0.0) {
    const double prod = r.speech_rate_words * r.audio_duration_seconds;
    const double expect = static_cast<double>(r.utterance_length_words);
    const double tol = 1e-6 * std::max(1.0, expect);
    if (std::abs(prod - expect) > tol)
      fail("speech_rate_words * duration != utterance_length_words");
  }

  // audioname embeds dataset, split and speaker.
  const std::string prefix = r.dataset + "-" + split_name(r.split) + "-" +
                             r.speaker_id + "-";
  if (r.audioname.rfind(prefix, 0) != 0)
    fail("audioname does not embed dataset/split/speaker");
  return v;
}

std::vector<std::string> validate_manifest(
    const std::vector<UtteranceRecord>& records) {
  std::vector<std::string> v;
  std::set<std::string> names;
  std::map<std::string, Split> entity_split;
  for (const auto& r : records) {
    auto row = validate_record(r);
    v.insert(v.end(), row.begin(), row.end());
    if (!names.insert(r.audioname).second)
      v.push_back(r.audioname + ": duplicate audioname");
    auto key = r.dataset + "/" + r.speaker_id;
    auto [it, inserted] = entity_split.emplace(key, r.split);
    if (!inserted && it->second != r.split)
      v.push_back(r.audioname + ": speaker " + r.speaker_id +
                  " spans multiple splits");
  }
  return v;
}

std::string serialize_record(const UtteranceRecord& r) {
  ordered_json j;
  j["audioname"] = r.audioname;
  j["split"] = split_name(r.split);
  j["dataset"] = r.dataset;
  j["ref_orig"] = r.ref_orig;
  j["ref_spoken"] = r.ref_spoken;
  j["ref_written"] = r.ref_written;
  j["sampling_rate"] = r.sampling_rate;
  j["samplingrate_orig"] = r.samplingrate_orig;
  j["speaker_id"] = r.speaker_id;
  j["audiopath_bigos"] = r.audiopath_bigos;
  j["audiopath_local"] = r.audiopath_local.empty() ? kNA : r.audiopath_local;
  j["audio_duration_samples"] = r.audio_duration_samples;
  j["audio_duration_seconds"] = r.audio_duration_seconds;
  j["speaker_gender"] = gender_name(r.speaker_gender);
  j["speaker_age"] = age_name(r.speaker_age);
  j["speech_rate_words"] = r.speech_rate_words;
  j["speech_rate_chars"] = r.speech_rate_chars;
  j["utterance_length_words"] = r.utterance_length_words;
  j["utterance_length_chars"] = r.utterance_length_chars;
  return j.dump();
}

UtteranceRecord parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("manifest: bad JSON line: ") + e.what());
  }
  auto str = [&j](const char* key) -> std::string {
    if (!j.contains(key)) throw SchemaError(std::string("manifest: missing field '") + key + "'");
    return j.at(key).get<std::string>();
  };
  UtteranceRecord r;
  r.audioname = str("audioname");
  r.split = split_from_name(str("split"));
  r.dataset = str("dataset");
  r.ref_orig = str("ref_orig");
  r.ref_spoken = str("ref_spoken");
  r.ref_written = str("ref_written");
  r.sampling_rate = j.at("sampling_rate").get<int>();
  r.samplingrate_orig = j.at("samplingrate_orig").get<int>();
  r.speaker_id = str("speaker_id");
  r.audiopath_bigos = str("audiopath_bigos");
  r.audiopath_local = str("audiopath_local");
  r.audio_duration_samples = j.at("audio_duration_samples").get<int64_t>();
  r.audio_duration_seconds = j.at("audio_duration_seconds").get<double>();
  std::string g = str("speaker_gender");
  r.speaker_gender = (g == kNA) ? Gender::kNA : gender_from_token(g);
  std::string a = str("speaker_age");
  r.speaker_age = (a == kNA) ? AgeGroup::kNA : age_from_token(a);
  r.speech_rate_words = j.at("speech_rate_words").get<double>();
  r.speech_rate_chars = j.at("speech_rate_chars").get<double>();
  r.utterance_length_words = j.at("utterance_length_words").get<int64_t>();
  r.utterance_length_chars = j.at("utterance_length_chars").get<int64_t>();
  return r;
}

std::string serialize_manifest(const std::vector<UtteranceRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) out << serialize_record(r) << '\n';
  return out.str();
}

std::vector<UtteranceRecord> parse_manifest_text(std::string_view text) {
  std::vector<UtteranceRecord> records;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) records.push_back(parse_record(line));
    start = nl + 1;
  }
  return records;
}

std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path) {
  return parse_manifest_text(fsutil::read_file(path));
}

void resolve_audio_paths(std::vector<UtteranceRecord>& records,
                         const std::filesystem::path& base_dir) {
  for (auto& r : records)
    r.audiopath_local =
        std::filesystem::absolute(base_dir / r.audiopath_bigos).string();
}

}  // namespace asrbench
