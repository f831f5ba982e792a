// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/align.hpp"

#include <algorithm>

#include "asrbench/utf8.hpp"

namespace asrbench {

Alignment& Alignment::operator+=(const Alignment& other) {
  hits += other.hits;
  subs += other.subs;
  dels += other.dels;
  inss += other.inss;
  ops.insert(ops.end(), other.ops.begin(), other.ops.end());
  return *this;
}

namespace {

enum Move : uint8_t { kMoveHit, kMoveSub, kMoveDel, kMoveIns, kMoveStart };

Alignment align_impl(const std::vector<std::string>& ref,
                     const std::vector<std::string>& hyp, bool want_ops) {
  const size_t n1 = ref.size();
  const size_t n2 = hyp.size();
  const size_t stride = n2 + 1;

  // Objective: minimal cost, then maximal hits. Hit counts vary between
  // minimal-cost alignments ("ab"->"ba" has H=0 via two subs or H=1 via
  // del+hit+ins); maximizing them makes H canonical, so WIL computed from
  // it is symmetric under swapping reference and hypothesis.
  std::vector<int32_t> cost((n1 + 1) * stride);
  std::vector<int32_t> hits((n1 + 1) * stride);
  std::vector<uint8_t> move((n1 + 1) * stride, kMoveStart);

  for (size_t j = 1; j <= n2; ++j) {
    cost[j] = static_cast<int32_t>(j);
    move[j] = kMoveIns;
  }
  for (size_t i = 1; i <= n1; ++i) {
    cost[i * stride] = static_cast<int32_t>(i);
    move[i * stride] = kMoveDel;
  }

  for (size_t i = 1; i <= n1; ++i) {
    for (size_t j = 1; j <= n2; ++j) {
      const bool eq = ref[i - 1] == hyp[j - 1];
      const size_t diag_idx = (i - 1) * stride + (j - 1);
      const size_t up_idx = (i - 1) * stride + j;
      const size_t left_idx = i * stride + (j - 1);

      // Candidates in tie preference order: hit > sub > del > ins.
      int32_t best_cost = cost[diag_idx] + (eq ? 0 : 1);
      int32_t best_hits = hits[diag_idx] + (eq ? 1 : 0);
      uint8_t m = eq ? kMoveHit : kMoveSub;

      const int32_t up_cost = cost[up_idx] + 1;
      if (up_cost < best_cost ||
          (up_cost == best_cost && hits[up_idx] > best_hits)) {
        best_cost = up_cost;
        best_hits = hits[up_idx];
        m = kMoveDel;
      }
      const int32_t left_cost = cost[left_idx] + 1;
      if (left_cost < best_cost ||
          (left_cost == best_cost && hits[left_idx] > best_hits)) {
        best_cost = left_cost;
        best_hits = hits[left_idx];
        m = kMoveIns;
      }
      cost[i * stride + j] = best_cost;
      hits[i * stride + j] = best_hits;
      move[i * stride + j] = m;
    }
  }

  Alignment a;
  size_t i = n1, j = n2;
  while (i > 0 || j > 0) {
    switch (move[i * stride + j]) {
      case kMoveHit:
        ++a.hits;
        if (want_ops) a.ops.push_back({OpKind::kHit, ref[i - 1], hyp[j - 1]});
        --i;
        --j;
        break;
      case kMoveSub:
        ++a.subs;
        if (want_ops) a.ops.push_back({OpKind::kSub, ref[i - 1], hyp[j - 1]});
        --i;
        --j;
        break;
      case kMoveDel:
        ++a.dels;
        if (want_ops) a.ops.push_back({OpKind::kDel, ref[i - 1], ""});
        --i;
        break;
      default:
        ++a.inss;
        if (want_ops) a.ops.push_back({OpKind::kIns, "", hyp[j - 1]});
        --j;
        break;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

}  // namespace

Alignment align(const std::vector<std::string>& ref_tokens,
                const std::vector<std::string>& hyp_tokens) {
  return align_impl(ref_tokens, hyp_tokens, /*want_ops=*/true);
}

Alignment align_counts(const std::vector<std::string>& ref_tokens,
                       const std::vector<std::string>& hyp_tokens) {
  return align_impl(ref_tokens, hyp_tokens, /*want_ops=*/false);
}

int64_t char_edit_distance(const std::string& ref_text,
                           const std::string& hyp_text) {
  std::u32string ref = utf8::decode_all(ref_text);
  std::u32string hyp = utf8::decode_all(hyp_text);
  const size_t n1 = ref.size();
  const size_t n2 = hyp.size();
  std::vector<int64_t> prev(n2 + 1), cur(n2 + 1);
  for (size_t j = 0; j <= n2; ++j) prev[j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= n1; ++i) {
    cur[0] = static_cast<int64_t>(i);
    for (size_t j = 1; j <= n2; ++j) {
      int64_t diag = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[n2];
}

}  // namespace asrbench
