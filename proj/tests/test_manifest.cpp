#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asrbench/errors.hpp"
#include "asrbench/manifest.hpp"

using namespace asrbench;
using doctest::Approx;

namespace {

UtteranceRecord sample_record() {
  UtteranceRecord r;
  r.dataset = "synth-fixture-26";
  r.split = Split::kTrain;
  r.speaker_id = "spk001";
  r.audioname = make_audioname(r.dataset, r.split, r.speaker_id, 1);
  r.ref_orig = "ala ma kota";
  r.ref_spoken = "ala ma kota";
  r.ref_written = "ala ma kota";
  r.sampling_rate = 16000;
  r.samplingrate_orig = 44100;
  r.audiopath_bigos = "data/synth-fixture-26/train/" + r.audioname + ".wav";
  r.audiopath_local = "N/A";
  r.audio_duration_samples = 32000;
  r.audio_duration_seconds = 2.0;
  r.speaker_gender = Gender::kFemale;
  r.speaker_age = AgeGroup::kThirties;
  derive_metadata(r);
  return r;
}

}  // namespace

TEST_CASE("derive_metadata computes lengths and rates") {
  auto r = sample_record();
  CHECK(r.utterance_length_words == 3);
  CHECK(r.utterance_length_chars == 9);
  CHECK(r.speech_rate_words == Approx(1.5));
  CHECK(r.speech_rate_chars == Approx(4.5));
}

TEST_CASE("derive_metadata on empty transcript") {
  UtteranceRecord r;
  r.ref_orig = "";
  r.audio_duration_seconds = 1.0;
  r.audio_duration_samples = 16000;
  derive_metadata(r);
  CHECK(r.utterance_length_words == 0);
  CHECK(r.utterance_length_chars == 0);
  CHECK(r.speech_rate_words == 0.0);
  CHECK(r.speech_rate_chars == 0.0);
}

TEST_CASE("derive_metadata tokenizes whitespace runs") {
  UtteranceRecord r;
  r.ref_orig = "a  b";
  r.audio_duration_seconds = 1.0;
  derive_metadata(r);
  CHECK(r.utterance_length_words == 2);
  CHECK(r.utterance_length_chars == 2);
}

TEST_CASE("derive_metadata rejects zero duration with transcript") {
  UtteranceRecord r;
  r.ref_orig = "niepusty";
  r.audio_duration_seconds = 0.0;
  CHECK_THROWS_AS(derive_metadata(r), CurationError);
}

TEST_CASE("polish characters count as single chars") {
  UtteranceRecord r;
  r.ref_orig = "żółć";
  r.audio_duration_seconds = 1.0;
  derive_metadata(r);
  CHECK(r.utterance_length_chars == 4);
  CHECK(r.utterance_length_words == 1);
}

TEST_CASE("audioname scheme") {
  CHECK(make_audioname("synth-fixture-26", Split::kDev, "spk007", 12) ==
        "synth-fixture-26-dev-spk007-00012");
}

TEST_CASE("record serialization round-trips byte-identically") {
  auto r = sample_record();
  std::string line = serialize_record(r);
  auto parsed = parse_record(line);
  CHECK(serialize_record(parsed) == line);
  CHECK(parsed.audioname == r.audioname);
  CHECK(parsed.speaker_gender == Gender::kFemale);
  CHECK(parsed.speaker_age == AgeGroup::kThirties);
  CHECK(parsed.audio_duration_seconds == r.audio_duration_seconds);
}

TEST_CASE("manifest round-trip is byte-identical") {
  std::vector<UtteranceRecord> records = {sample_record()};
  auto r2 = sample_record();
  r2.audioname = make_audioname(r2.dataset, r2.split, r2.speaker_id, 2);
  r2.audiopath_bigos = "data/x/" + r2.audioname + ".wav";
  r2.ref_orig = "żółć i chrząszcz";
  r2.audio_duration_seconds = 1.75;
  r2.audio_duration_samples = 28000;
  derive_metadata(r2);
  records.push_back(r2);

  std::string text = serialize_manifest(records);
  auto parsed = parse_manifest_text(text);
  REQUIRE(parsed.size() == 2);
  CHECK(serialize_manifest(parsed) == text);
}

TEST_CASE("N/A fields serialize as the literal string") {
  auto r = sample_record();
  r.speaker_gender = Gender::kNA;
  r.speaker_age = AgeGroup::kNA;
  std::string line = serialize_record(r);
  CHECK(line.find("\"speaker_gender\":\"N/A\"") != std::string::npos);
  CHECK(line.find("\"speaker_age\":\"N/A\"") != std::string::npos);
  auto parsed = parse_record(line);
  CHECK(parsed.speaker_gender == Gender::kNA);
  CHECK(parsed.speaker_age == AgeGroup::kNA);
}

TEST_CASE("validate_record catches inconsistencies") {
  auto good = sample_record();
  CHECK(validate_record(good).empty());

  auto bad_rate = good;
  bad_rate.sampling_rate = 8000;
  CHECK_FALSE(validate_record(bad_rate).empty());

  auto bad_words = good;
  bad_words.utterance_length_words = 99;
  CHECK_FALSE(validate_record(bad_words).empty());

  auto bad_duration = good;
  bad_duration.audio_duration_samples += 1000;
  CHECK_FALSE(validate_record(bad_duration).empty());

  auto bad_name = good;
  bad_name.audioname = "wrong-prefix-00001";
  CHECK_FALSE(validate_record(bad_name).empty());
}

TEST_CASE("validate_manifest catches duplicates and split leaks") {
  auto a = sample_record();
  auto b = sample_record();  // same audioname
  auto dup = validate_manifest({a, b});
  CHECK_FALSE(dup.empty());

  b.audioname = make_audioname(b.dataset, Split::kTest, b.speaker_id, 1);
  b.split = Split::kTest;  // same speaker in two splits
  auto leak = validate_manifest({a, b});
  bool found = false;
  for (const auto& msg : leak)
    if (msg.find("spans multiple splits") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("age and gender token mapping") {
  CHECK(gender_from_token("male") == Gender::kMale);
  CHECK(gender_from_token("F") == Gender::kFemale);
  CHECK(gender_from_token("unknown") == Gender::kNA);
  CHECK(age_from_token("twenties") == AgeGroup::kTwenties);
  CHECK(age_from_token("fourties") == AgeGroup::kFourties);
  CHECK(age_from_token("nineties") == AgeGroup::kEightiesPlus);
  CHECK(age_from_token("34") == AgeGroup::kThirties);
  CHECK(age_from_token("85") == AgeGroup::kEightiesPlus);
  CHECK(age_from_token("12") == AgeGroup::kNA);
  CHECK(age_from_token("") == AgeGroup::kNA);
  CHECK(age_display(AgeGroup::kTwenties) == "20s");
}
