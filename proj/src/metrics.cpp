// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/metrics.hpp"

#include "asrbench/errors.hpp"
#include "asrbench/utf8.hpp"

namespace asrbench {

double wer(const Alignment& a) {
  const int64_t n1 = a.ref_len();
  if (n1 == 0) {
    if (a.hyp_len() == 0) return 0.0;
    throw MetricError("wer undefined: empty reference");
  }
  return static_cast<double>(a.errors()) / static_cast<double>(n1);
}

double mer(const Alignment& a) {
  const int64_t total = a.hits + a.subs + a.dels + a.inss;
  if (total == 0) return 0.0;  // both sides empty: perfect
  return static_cast<double>(a.errors()) / static_cast<double>(total);
}

double wil(const Alignment& a) {
  const int64_t n1 = a.ref_len();
  const int64_t n2 = a.hyp_len();
  if (n1 == 0 && n2 == 0) return 0.0;
  if (a.hits == 0) return 1.0;  // covers empty-either-side: all info lost
  double h = static_cast<double>(a.hits);
  return 1.0 - (h * h) / (static_cast<double>(n1) * static_cast<double>(n2));
}

double cer(const std::string& ref_text, const std::string& hyp_text) {
  const auto ref_chars = static_cast<int64_t>(utf8::length(ref_text));
  if (ref_chars == 0) {
    if (hyp_text.empty()) return 0.0;
    throw MetricError("cer undefined: empty reference");
  }
  return static_cast<double>(char_edit_distance(ref_text, hyp_text)) /
         static_cast<double>(ref_chars);
}

double ser(const std::vector<bool>& sentence_correct) {
  if (sentence_correct.empty())
    throw MetricError("ser undefined: empty corpus");
  int64_t errs = 0;
  for (bool ok : sentence_correct)
    if (!ok) ++errs;
  return static_cast<double>(errs) /
         static_cast<double>(sentence_correct.size());
}

CorpusMetrics MetricReport::from_counts(const Alignment& counts,
                                        int64_t ref_chars, int64_t char_edits,
                                        int64_t n_utterances,
                                        int64_t n_incorrect) {
  if (counts.ref_len() == 0)
    throw MetricError("corpus metrics undefined: no reference words");
  CorpusMetrics m;
  m.wer = wer(counts);
  m.mer = mer(counts);
  m.wil = wil(counts);
  m.cer = ref_chars > 0 ? static_cast<double>(char_edits) /
                              static_cast<double>(ref_chars)
                        : 0.0;
  m.ser = n_utterances > 0 ? static_cast<double>(n_incorrect) /
                                 static_cast<double>(n_utterances)
                           : 0.0;
  return m;
}

MetricReport corpus_metrics(const std::vector<ScoredPair>& pairs,
                            const textnorm::NormalizationConfig& norm) {
  if (pairs.empty()) throw MetricError("corpus_metrics: empty pair list");

  MetricReport report;
  report.normalization = norm.name();
  int64_t n_incorrect = 0;

  for (const auto& pair : pairs) {
    const std::string ref = norm.apply(pair.ref);
    const std::string hyp = norm.apply(pair.hyp);

    UtteranceScore u;
    u.audioname = pair.audioname;
    u.sentence_correct = (ref == hyp);
    if (!u.sentence_correct) ++n_incorrect;

    Alignment a = align_counts(utf8::split_ws(ref), utf8::split_ws(hyp));
    u.hits = a.hits;
    u.subs = a.subs;
    u.dels = a.dels;
    u.inss = a.inss;
    u.ref_chars = static_cast<int64_t>(utf8::length(ref));
    u.char_edits = char_edit_distance(ref, hyp);

    // Per-utterance word metrics stay N/A on an empty reference; the
    // counts still pool into the corpus micro-average.
    if (a.ref_len() > 0 || a.hyp_len() == 0) {
      u.wer = wer(a);
      u.wil = wil(a);
    }
    u.mer = mer(a);
    if (u.ref_chars > 0 || hyp.empty())
      u.cer = cer(ref, hyp);

    report.counts += a;
    report.ref_chars_total += u.ref_chars;
    report.char_edits_total += u.char_edits;
    report.per_utterance.push_back(std::move(u));
  }
  report.counts.ops.clear();

  if (report.counts.ref_len() == 0)
    throw MetricError(
        "corpus_metrics: every reference is empty after normalization");

  report.corpus = MetricReport::from_counts(
      report.counts, report.ref_chars_total, report.char_edits_total,
      static_cast<int64_t>(pairs.size()), n_incorrect);
  return report;
}

}  // namespace asrbench
