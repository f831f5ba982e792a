#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "asrbench/errors.hpp"
#include "asrbench/metrics.hpp"
#include "asrbench/rng.hpp"

using namespace asrbench;
using doctest::Approx;

namespace {

Alignment make_alignment(const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp) {
  return align(ref, hyp);
}

}  // namespace

TEST_CASE("wer/mer/wil on one substitution of three") {
  auto a = make_alignment({"a", "b", "c"}, {"a", "x", "c"});
  CHECK(wer(a) == Approx(1.0 / 3.0));
  CHECK(mer(a) == Approx(1.0 / 3.0));
  CHECK(wil(a) == Approx(1.0 - 4.0 / 9.0));
}

TEST_CASE("wer/mer/wil on identical sequences") {
  auto a = make_alignment({"x", "y"}, {"x", "y"});
  CHECK(wer(a) == 0.0);
  CHECK(mer(a) == 0.0);
  CHECK(wil(a) == 0.0);
}

TEST_CASE("wer can exceed one with insertions") {
  auto a = make_alignment({"a"}, {"a", "b", "c"});
  CHECK(wer(a) == Approx(2.0));
  CHECK(mer(a) == Approx(2.0 / 3.0));
  CHECK(wil(a) == Approx(1.0 - 1.0 / 3.0));
}

TEST_CASE("empty-side conventions") {
  auto both_empty = make_alignment({}, {});
  CHECK(wer(both_empty) == 0.0);
  CHECK(mer(both_empty) == 0.0);
  CHECK(wil(both_empty) == 0.0);

  auto empty_ref = make_alignment({}, {"x"});
  CHECK_THROWS_AS(wer(empty_ref), MetricError);
  CHECK(wil(empty_ref) == 1.0);

  auto empty_hyp = make_alignment({"x"}, {});
  CHECK(wer(empty_hyp) == 1.0);
  CHECK(wil(empty_hyp) == 1.0);
}

TEST_CASE("cer") {
  CHECK(cer("abc", "abc") == 0.0);
  CHECK(cer("kot", "kos") == Approx(1.0 / 3.0));
  CHECK(cer("ab", "") == Approx(1.0));
  CHECK_THROWS_AS(cer("", "x"), MetricError);
  CHECK(cer("", "") == 0.0);
}

TEST_CASE("ser") {
  CHECK(ser({true, false}) == Approx(0.5));
  CHECK(ser({true, true, true}) == 0.0);
  CHECK(ser({false, false, false, true}) == Approx(0.75));
  CHECK_THROWS_AS(ser({}), MetricError);
}

TEST_CASE("metric properties over random alignments") {
  Rng rng(20250607);
  static const std::string alphabet[] = {"a", "b", "c"};
  for (int iter = 0; iter < 3000; ++iter) {
    std::vector<std::string> ref, hyp;
    size_t n1 = 1 + rng.below(8);
    size_t n2 = rng.below(9);
    for (size_t i = 0; i < n1; ++i) ref.push_back(alphabet[rng.below(3)]);
    for (size_t i = 0; i < n2; ++i) hyp.push_back(alphabet[rng.below(3)]);
    auto a = align(ref, hyp);
    double w = wer(a), m = mer(a), l = wil(a);
    CHECK(w >= 0.0);
    CHECK(m >= 0.0);
    CHECK(m <= 1.0);
    CHECK(m <= w + 1e-12);
    CHECK(l >= 0.0);
    CHECK(l <= 1.0);
    CHECK((w == 0.0) == (m == 0.0));
    CHECK((w == 0.0) == (l == 0.0));
    CHECK((l == 0.0) == (ref == hyp));
    // wil symmetry
    CHECK(wil(align(hyp, ref)) == Approx(l));
  }
}

TEST_CASE("corpus_metrics pools counts") {
  auto norm = textnorm::NormalizationConfig::none();
  std::vector<ScoredPair> pairs = {
      {"u1", "ala ma kota", "ala ma kota"},
      {"u2", "raz dwa trzy", "raz xxx trzy"},
  };
  auto report = corpus_metrics(pairs, norm);
  CHECK(report.corpus.wer == Approx(1.0 / 6.0));
  CHECK(report.corpus.ser == Approx(0.5));
  CHECK(report.per_utterance.size() == 2);
  CHECK(report.per_utterance[0].sentence_correct);
  CHECK_FALSE(report.per_utterance[1].sentence_correct);
  CHECK(*report.per_utterance[1].wer == Approx(1.0 / 3.0));
}

TEST_CASE("corpus_metrics single utterance equals per-utterance") {
  auto norm = textnorm::NormalizationConfig::none();
  auto report = corpus_metrics({{"u1", "a b c d", "a b x d"}}, norm);
  CHECK(report.corpus.wer == Approx(*report.per_utterance[0].wer));
  CHECK(report.corpus.mer == Approx(*report.per_utterance[0].mer));
  CHECK(report.corpus.wil == Approx(*report.per_utterance[0].wil));
  CHECK(report.corpus.cer == Approx(*report.per_utterance[0].cer));
}

TEST_CASE("corpus_metrics respects normalization") {
  std::vector<ScoredPair> pairs = {{"u1", "Ala Ma Kota", "ala ma kota"}};
  auto raw = corpus_metrics(pairs, textnorm::NormalizationConfig::none());
  CHECK(raw.corpus.wer > 0.0);
  CHECK(raw.corpus.ser == 1.0);
  auto all = corpus_metrics(pairs, textnorm::NormalizationConfig::all());
  CHECK(all.corpus.wer == 0.0);
  CHECK(all.corpus.ser == 0.0);
}

TEST_CASE("corpus_metrics is order-invariant") {
  auto norm = textnorm::NormalizationConfig::none();
  std::vector<ScoredPair> pairs = {
      {"u1", "a b", "a b"},
      {"u2", "c d e", "c x e"},
      {"u3", "f", "f g h"},
  };
  auto fwd = corpus_metrics(pairs, norm);
  std::reverse(pairs.begin(), pairs.end());
  auto rev = corpus_metrics(pairs, norm);
  CHECK(fwd.corpus.wer == Approx(rev.corpus.wer));
  CHECK(fwd.corpus.mer == Approx(rev.corpus.mer));
  CHECK(fwd.corpus.wil == Approx(rev.corpus.wil));
  CHECK(fwd.corpus.cer == Approx(rev.corpus.cer));
  CHECK(fwd.corpus.ser == Approx(rev.corpus.ser));
}

TEST_CASE("corpus_metrics error cases") {
  auto norm = textnorm::NormalizationConfig::none();
  CHECK_THROWS_AS(corpus_metrics({}, norm), MetricError);
  // every reference empty after normalization
  std::vector<ScoredPair> pairs = {{"u1", "...", "cokolwiek"}};
  CHECK_THROWS_AS(
      corpus_metrics(pairs, textnorm::NormalizationConfig::all()),
      MetricError);
}
