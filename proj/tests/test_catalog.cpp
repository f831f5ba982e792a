#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <random>

#include "asrbench/catalog.hpp"
#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"

using namespace asrbench;
using namespace asrbench::catalog;
using doctest::Approx;

namespace {

std::filesystem::path shipped_catalog() {
  return std::filesystem::path(ASRBENCH_SOURCE_DIR) / "data" / "catalog.tsv";
}

bool is_pelcra(const CatalogEntry& e) {
  return e.dataset_codename.rfind("ul-", 0) == 0;
}

}  // namespace

TEST_CASE("codename pattern") {
  CHECK(codename_valid("pjatk-clarin_studio-15"));
  CHECK(codename_valid("fair-mls-20"));
  CHECK(codename_valid("pwr-maleset-unk"));
  CHECK(codename_valid("ul-spokes_biz_vc2-23"));
  CHECK_FALSE(codename_valid("NoCaps-allowed-20"));
  CHECK_FALSE(codename_valid("missing_year"));
  CHECK_FALSE(codename_valid("one-2"));
  CHECK_FALSE(codename_valid("bad-suffix-3x"));
}

TEST_CASE("shipped catalog parses, validates and round-trips") {
  auto entries = parse_catalog(shipped_catalog());
  REQUIRE(entries.size() == 24);

  auto report = validate_catalog(entries);
  CHECK(report.valid());
  CHECK(report.error_count() == 0);

  std::string text = fsutil::read_file(shipped_catalog());
  CHECK(serialize_catalog(entries) == text);
}

TEST_CASE("summarize matches the published totals") {
  auto entries = parse_catalog(shipped_catalog());

  std::vector<CatalogEntry> bigos, pelcra;
  for (const auto& e : entries)
    (is_pelcra(e) ? pelcra : bigos).push_back(e);
  REQUIRE(bigos.size() == 12);
  REQUIRE(pelcra.size() == 12);

  auto sb = summarize_catalog(bigos);
  CHECK(std::abs(sb.total_hours - 293.76) <= 1e-9);
  CHECK(sb.total_samples == 111272);

  auto sp = summarize_catalog(pelcra);
  CHECK(std::abs(sp.total_hours - 529.52) <= 1e-9);
  CHECK(sp.total_samples == 283258);
  CHECK(sp.total_speakers == 972);
}

TEST_CASE("summarize single entry is the identity") {
  auto entries = parse_catalog(shipped_catalog());
  const auto& e = entries.front();
  auto s = summarize_catalog({e});
  CHECK(s.entry_count == 1);
  CHECK(s.total_hours == Approx(*e.transcribed_hours));
  CHECK(s.total_samples == *e.sample_count);
  CHECK(s.per_license.at(e.license) == 1);
}

TEST_CASE("summarize is permutation-invariant") {
  auto entries = parse_catalog(shipped_catalog());
  auto base = summarize_catalog(entries);
  std::mt19937 shuffler(5);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(entries.begin(), entries.end(), shuffler);
    auto s = summarize_catalog(entries);
    CHECK(s.total_hours == base.total_hours);  // bitwise equal
    CHECK(s.total_samples == base.total_samples);
    CHECK(s.total_speakers == base.total_speakers);
    CHECK(s.per_license == base.per_license);
  }
}

TEST_CASE("validation flags invariant violations") {
  CatalogEntry e;
  e.dataset_codename = "fair-mls-20";
  e.original_partitioning = OriginalPartitioning::kTrainTestDev;
  e.split_entity = SplitEntity::kNotApplicable;
  e.transcribed_hours = 107.86;
  e.sample_count = 26072;
  e.speaker_count = 24;
  CHECK(validate_catalog({e}).violations.empty());

  // preserved original splits must not carry a split entity
  e.split_entity = SplitEntity::kRecordingId;
  auto report = validate_catalog({e});
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].field == "split_entity");
  CHECK(report.violations[0].codename == "fair-mls-20");

  // hours without samples
  e.split_entity = SplitEntity::kNotApplicable;
  e.sample_count = 0;
  auto r2 = validate_catalog({e});
  REQUIRE(r2.violations.size() == 1);

  CHECK(validate_catalog({}).violations.empty());
}

TEST_CASE("validation is idempotent and pure") {
  auto entries = parse_catalog(shipped_catalog());
  auto before = serialize_catalog(entries);
  auto r1 = validate_catalog(entries);
  auto r2 = validate_catalog(entries);
  CHECK(r1.violations.size() == r2.violations.size());
  CHECK(serialize_catalog(entries) == before);
}

TEST_CASE("license escape token warns instead of erroring") {
  CatalogEntry e;
  e.dataset_codename = "acme-future-99";
  e.license = "other:community-2.0";
  e.transcribed_hours = 1.0;
  e.sample_count = 10;
  auto report = validate_catalog({e});
  CHECK(report.valid());
  CHECK(report.warning_count() == 1);
}

TEST_CASE("unknown enum tokens raise schema errors naming the token") {
  std::string text = fsutil::read_file(shipped_catalog());
  auto pos = text.find("spontaneous");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, 11, "whispered\t\t");
  bool threw = false;
  try {
    parse_catalog_text(broken);
  } catch (const SchemaError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("whispered") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("missing catalog file raises IoError with the path") {
  bool threw = false;
  try {
    parse_catalog("/nonexistent/catalog.tsv");
  } catch (const IoError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("/nonexistent/catalog.tsv") !=
          std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("duplicate codenames are flagged") {
  auto entries = parse_catalog(shipped_catalog());
  entries.push_back(entries.front());
  auto report = validate_catalog(entries);
  CHECK_FALSE(report.valid());
}
