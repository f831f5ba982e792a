// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_ALIGN_HPP
#define ASRBENCH_ALIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace asrbench {

enum class OpKind { kHit, kSub, kDel, kIns };

struct AlignOp {
  OpKind kind;
  // ref_tok empty for insertions, hyp_tok empty for deletions.
  std::string ref_tok;
  std::string hyp_tok;
};

// Token alignment counts. Invariants: hits+subs+dels == ref length,
// hits+subs+inss == hyp length, ops.size() == hits+subs+dels+inss.
struct Alignment {
  int64_t hits = 0;
  int64_t subs = 0;
  int64_t dels = 0;
  int64_t inss = 0;
  std::vector<AlignOp> ops;

  int64_t ref_len() const { return hits + subs + dels; }
  int64_t hyp_len() const { return hits + subs + inss; }
  int64_t errors() const { return subs + dels + inss; }

  Alignment& operator+=(const Alignment& other);
};

// Minimum-edit-distance alignment under unit costs. Among minimal-cost
// alignments the hit count is maximized (canonical H for WIL); remaining
// ties break hit > substitution > deletion > insertion, so ops are
// deterministic.
Alignment align(const std::vector<std::string>& ref_tokens,
                const std::vector<std::string>& hyp_tokens);

// Counts-only variant used where the op list is not needed.
Alignment align_counts(const std::vector<std::string>& ref_tokens,
                       const std::vector<std::string>& hyp_tokens);

// Character-level edit distance (every codepoint, whitespace included).
int64_t char_edit_distance(const std::string& ref_text,
                           const std::string& hyp_text);

}  // namespace asrbench

#endif  // ASRBENCH_ALIGN_HPP
