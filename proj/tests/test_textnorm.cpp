#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"
#include "asrbench/rng.hpp"
#include "asrbench/textnorm.hpp"
#include "asrbench/utf8.hpp"

#include <filesystem>

using namespace asrbench;
using namespace asrbench::textnorm;

namespace {

Lexicon filler_lexicon() {
  return {{"um", ""}, {"mhm", ""}, {"kissindżer", "kissinger"}};
}

// Random UTF-8 text skewed toward transcript-like content: words, digits,
// punctuation, odd whitespace, tags, some non-Latin.
std::string random_text(Rng& rng) {
  static const char* pieces[] = {
      "ala",  "ma",   "Kota",  "ŻÓŁĆ",   "gęślą", "um",   "mhm",
      "co-to", "123",  "<trunc>", "<noise>", "...",   "!?",  "„cytat”",
      "—",    " ",    "  ",    "\t",     "\n",    " ", "жук",
      "café", "ß",    "İstanbul", "🤖",   ",",     ".",    "",
  };
  std::string out;
  int n = static_cast<int>(rng.below(12));
  for (int i = 0; i < n; ++i) {
    out += pieces[rng.below(std::size(pieces))];
    if (rng.below(3) == 0) out += " ";
  }
  return out;
}

}  // namespace

TEST_CASE("remove_blanks collapses runs and trims") {
  CHECK(remove_blanks("  ala  ma\tkota ") == "ala ma kota");
  CHECK(remove_blanks("") == "");
  CHECK(remove_blanks("abc") == "abc");
  CHECK(remove_blanks(" \t \n ") == "");
  // non-breaking space is whitespace too
  CHECK(remove_blanks("a  b") == "a b");
}

TEST_CASE("lowercase folds the full alphabet") {
  CHECK(lowercase("Żółć ŁAbędź") == "żółć łabędź");
  CHECK(lowercase("abc 123") == "abc 123");
  CHECK(lowercase("") == "");
}

TEST_CASE("remove_punctuation replaces with space then collapses") {
  CHECK(remove_punctuation("Ala, ma kota.") == "Ala ma kota");
  CHECK(remove_punctuation("co-to") == "co to");
  CHECK(remove_punctuation("...") == "");
  CHECK(remove_punctuation("a„b”c") == "a b c");
  CHECK(remove_punctuation("3+4") == "3+4");  // math symbols are not P
}

TEST_CASE("lexicon_normalize replaces and deletes tokens") {
  auto lex = filler_lexicon();
  CHECK(lexicon_normalize("um ala mhm ma kota", lex) == "ala ma kota");
  CHECK(lexicon_normalize("kissindżer wrócił", lex) == "kissinger wrócił");
  CHECK(lexicon_normalize("Um ALA", lex) == "ALA");  // case-insensitive keys
  // identity under the empty lexicon, even spacing survives
  CHECK(lexicon_normalize("a  b", {}) == "a  b");
  CHECK(lexicon_normalize("nic tu nie ma", lex) == "nic tu nie ma");
}

TEST_CASE("remove_tags removes whole matching tokens") {
  std::regex pat("<[a-z_]+>");
  CHECK(remove_tags("ala <trunc> ma kota", pat) == "ala ma kota");
  CHECK(remove_tags("bez tagów", pat) == "bez tagów");
  CHECK(remove_tags("<trunc> <trunc>", pat) == "");
  // tags glued to words are not whole tokens
  CHECK(remove_tags("ala<trunc>", pat) == "ala<trunc>");
}

TEST_CASE("apply_stack composes in the fixed order") {
  auto all = NormalizationConfig::all(filler_lexicon());
  CHECK(all.apply("Um, Ala ma <trunc> Kota!") == "ala ma kota");
  CHECK(all.apply("") == "");

  auto none = NormalizationConfig::none();
  CHECK(none.apply("  AnyThing   Goes ") == "  AnyThing   Goes ");
}

TEST_CASE("apply_stack idempotence on random text") {
  auto all = NormalizationConfig::all(filler_lexicon());
  Rng rng(20260810);
  for (int i = 0; i < 2000; ++i) {
    std::string text = random_text(rng);
    std::string once = all.apply(text);
    CHECK(all.apply(once) == once);
  }
}

TEST_CASE("each method is idempotent") {
  Rng rng(99);
  auto lex = filler_lexicon();
  std::regex pat("<[^<>]+>");
  for (int i = 0; i < 1000; ++i) {
    std::string t = random_text(rng);
    std::string b = remove_blanks(t);
    CHECK(remove_blanks(b) == b);
    std::string l = lowercase(t);
    CHECK(lowercase(l) == l);
    std::string p = remove_punctuation(t);
    CHECK(remove_punctuation(p) == p);
    std::string x = lexicon_normalize(t, lex);
    CHECK(lexicon_normalize(x, lex) == x);
    std::string g = remove_tags(t, pat);
    CHECK(remove_tags(g, pat) == g);
  }
}

TEST_CASE("lowercase then punctuation equals the two-method stack") {
  auto stack = NormalizationConfig::from_name("lowercase,punctuation");
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    std::string t = random_text(rng);
    CHECK(remove_punctuation(lowercase(t)) == stack.apply(t));
  }
}

TEST_CASE("stacks containing blanks leave no double spaces") {
  auto all = NormalizationConfig::all(filler_lexicon());
  Rng rng(31337);
  for (int i = 0; i < 500; ++i) {
    std::string out = all.apply(random_text(rng));
    CHECK(out.find("  ") == std::string::npos);
    if (!out.empty()) {
      CHECK(out.front() != ' ');
      CHECK(out.back() != ' ');
    }
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(NormalizationConfig::from_name("bogus"), ConfigError);
  CHECK_THROWS_AS(NormalizationConfig::from_name("blanks,blanks"),
                  ConfigError);
  CHECK_THROWS_AS(NormalizationConfig::all({}, "<[unclosed"), ConfigError);
  // replacement that is itself a key would never reach a fixpoint
  CHECK_THROWS_AS(NormalizationConfig::all({{"a", "b"}, {"b", "a"}}),
                  ConfigError);
  // method subsets parse
  auto cfg = NormalizationConfig::from_name("tags,blanks");
  CHECK(cfg.methods().size() == 2);
}

TEST_CASE("lexicon file loads with comments and deletions") {
  auto dir = std::filesystem::temp_directory_path() / "asrbench_test_lex";
  std::filesystem::create_directories(dir);
  auto path = dir / "lex.tsv";
  fsutil::atomic_write(path,
                       "# fillers\num\t\nmhm\t\nKissindżer\tKissinger\n");
  auto lex = load_lexicon(path);
  CHECK(lex.size() == 3);
  CHECK(lex.at("um") == "");
  CHECK(lex.at("kissindżer") == "Kissinger");
  std::filesystem::remove_all(dir);
}
