// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/encoding.hpp"

#include <cstdint>

#include "asrbench/errors.hpp"
#include "asrbench/utf8.hpp"

namespace asrbench::encoding {

namespace {

#include "encoding_tables.inc"

constexpr uint16_t kUndefined = 0xFFFF;

std::string from_table(std::string_view text, const uint16_t (&table)[256],
                       const char* codec) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    uint16_t cp = table[static_cast<uint8_t>(c)];
    if (cp == kUndefined)
      throw CurationError(std::string("byte undefined in ") + codec +
                          ": 0x" + std::to_string(static_cast<uint8_t>(c)));
    utf8::encode(cp, out);
  }
  return out;
}

}  // namespace

Source source_from_name(std::string_view name) {
  if (name == "utf-8" || name == "utf8" || name.empty()) return Source::kUtf8;
  if (name == "windows-1250" || name == "cp1250") return Source::kWindows1250;
  if (name == "iso-8859-2" || name == "latin2") return Source::kIso8859_2;
  throw ConfigError("unknown source encoding: '" + std::string(name) + "'");
}

const char* source_name(Source s) {
  switch (s) {
    case Source::kUtf8:
      return "utf-8";
    case Source::kWindows1250:
      return "windows-1250";
    case Source::kIso8859_2:
      return "iso-8859-2";
  }
  return "?";
}

std::string to_utf8(std::string_view text, Source source) {
  switch (source) {
    case Source::kUtf8:
      if (!utf8::is_valid(text))
        throw CurationError("transcript is not valid UTF-8 under the "
                            "declared utf-8 encoding");
      return std::string(text);
    case Source::kWindows1250:
      return from_table(text, kCp1250, "windows-1250");
    case Source::kIso8859_2:
      return from_table(text, kIso8859_2, "iso-8859-2");
  }
  return std::string(text);
}

}  // namespace asrbench::encoding
