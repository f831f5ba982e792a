// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/utf8.hpp"

#include <algorithm>

namespace asrbench::utf8 {

namespace {

struct LowerPair {
  uint32_t from;
  uint32_t to;
};

struct CpRange {
  uint32_t lo;
  uint32_t hi;
};

#include "unicode_tables.inc"

constexpr char32_t kWhitespace[] = {
    0x09,   0x0A,   0x0B,   0x0C,   0x0D,   0x20,   0x85,   0xA0,
    0x1680, 0x2000, 0x2001, 0x2002, 0x2003, 0x2004, 0x2005, 0x2006,
    0x2007, 0x2008, 0x2009, 0x200A, 0x2028, 0x2029, 0x202F, 0x205F,
    0x3000,
};

}  // namespace

char32_t decode(std::string_view s, size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto cb = [&](size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | cb(1);
    if (cp >= 0x80) {
      i += 2;
      return cp;
    }
  } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp =
        (static_cast<char32_t>(b0 & 0x0F) << 12) | (cb(1) << 6) | cb(2);
    if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) {
      i += 3;
      return cp;
    }
  } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (cb(1) << 12) |
                  (cb(2) << 6) | cb(3);
    if (cp >= 0x10000 && cp <= 0x10FFFF) {
      i += 4;
      return cp;
    }
  }
  // Malformed: pass the raw byte through.
  ++i;
  return b0;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string decode_all(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) out.push_back(decode(s, i));
  return out;
}

std::string encode_all(const std::u32string& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) encode(cp, out);
  return out;
}

size_t length(std::string_view s) {
  size_t i = 0, n = 0;
  while (i < s.size()) {
    decode(s, i);
    ++n;
  }
  return n;
}

bool is_valid(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    size_t before = i;
    decode(s, i);
    if (b0 >= 0x80 && i == before + 1) return false;
  }
  return true;
}

bool is_space(char32_t cp) {
  for (char32_t w : kWhitespace)
    if (cp == w) return true;
  return false;
}

bool is_punct(char32_t cp) {
  auto it = std::upper_bound(
      std::begin(kPunctTable), std::end(kPunctTable), cp,
      [](char32_t v, const CpRange& r) { return v < r.lo; });
  if (it == std::begin(kPunctTable)) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

char32_t to_lower(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kLowerTable), std::end(kLowerTable), cp,
      [](const LowerPair& p, char32_t v) { return p.from < v; });
  if (it != std::end(kLowerTable) && it->from == cp) return it->to;
  return cp;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) encode(to_lower(decode(s, i)), out);
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> tokens;
  std::string cur;
  size_t i = 0;
  while (i < s.size()) {
    size_t start = i;
    char32_t cp = decode(s, i);
    if (is_space(cp)) {
      if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.append(s.substr(start, i - start));
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

}  // namespace asrbench::utf8
