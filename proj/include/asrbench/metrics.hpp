// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_METRICS_HPP
#define ASRBENCH_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "asrbench/align.hpp"
#include "asrbench/textnorm.hpp"

namespace asrbench {

// Word error rate: (S+D+I)/N1. Can exceed 1 with many insertions.
// Throws MetricError when the reference is empty and the hypothesis is not;
// both sides empty scores 0 (perfect).
double wer(const Alignment& a);

// Match error rate: (S+D+I)/(H+S+D+I), bounded in [0,1].
double mer(const Alignment& a);

// Word information lost: 1 - H^2/(N1*N2), symmetric, in [0,1]. When one
// side is empty and the other is not there are no hits and all information
// is lost (1.0); both sides empty scores 0.
double wil(const Alignment& a);

// Character error rate: codepoint edit distance / reference codepoints,
// whitespace counted. Throws MetricError on an empty reference unless the
// hypothesis is empty too (0).
double cer(const std::string& ref_text, const std::string& hyp_text);

// Sentence error rate: fraction of utterances whose normalized hypothesis
// differs from the normalized reference. Throws MetricError on an empty
// corpus. Flags are "sentence correct" booleans.
double ser(const std::vector<bool>& sentence_correct);

struct UtteranceScore {
  std::string audioname;
  // Word metrics are absent when the normalized reference is empty.
  std::optional<double> wer;
  std::optional<double> mer;
  std::optional<double> wil;
  std::optional<double> cer;
  bool sentence_correct = false;
  // Pooled-count inputs, kept so slices can be micro-averaged later.
  int64_t hits = 0, subs = 0, dels = 0, inss = 0;
  int64_t ref_chars = 0, char_edits = 0;
};

struct CorpusMetrics {
  double ser = 0.0;
  double wer = 0.0;
  double mer = 0.0;
  double wil = 0.0;
  double cer = 0.0;
};

// Per-utterance and corpus-level scores under one normalization config.
// Corpus WER/MER/WIL are micro-averages over pooled alignment counts, CER
// over pooled character counts.
struct MetricReport {
  std::vector<UtteranceScore> per_utterance;
  CorpusMetrics corpus;
  std::string normalization;
  Alignment counts;  // summed word alignment counts (ops not retained)
  int64_t ref_chars_total = 0;
  int64_t char_edits_total = 0;

  // Micro metrics recomputed from pooled counts; used when re-aggregating
  // subsets of utterances.
  static CorpusMetrics from_counts(const Alignment& counts, int64_t ref_chars,
                                   int64_t char_edits, int64_t n_utterances,
                                   int64_t n_incorrect);
};

struct ScoredPair {
  std::string audioname;
  std::string ref;
  std::string hyp;
};

// Normalizes both sides identically, aligns, and scores. Throws MetricError
// when the pair list is empty or every reference normalizes to empty.
MetricReport corpus_metrics(const std::vector<ScoredPair>& pairs,
                            const textnorm::NormalizationConfig& norm);

}  // namespace asrbench

#endif  // ASRBENCH_METRICS_HPP
