// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_UTF8_HPP
#define ASRBENCH_UTF8_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench::utf8 {

// Decodes the codepoint starting at byte offset i; advances i past it.
// Malformed bytes decode as one replacement-free unit: the raw byte value
// is returned and i advances by one, so invalid input passes through
// transforms unharmed instead of throwing mid-pipeline.
char32_t decode(std::string_view s, size_t& i);

void encode(char32_t cp, std::string& out);

std::u32string decode_all(std::string_view s);
std::string encode_all(const std::u32string& cps);

// Codepoint count (not bytes).
size_t length(std::string_view s);

bool is_valid(std::string_view s);

// Unicode White_Space.
bool is_space(char32_t cp);

// Unicode general category P plus the transcript-typical symbol extras
// (spacing accents, primes). See tools/gen_unicode_tables.py.
bool is_punct(char32_t cp);

// Simple (single-codepoint) lowercase mapping; identity when no mapping.
char32_t to_lower(char32_t cp);

// Lowercases a whole UTF-8 string.
std::string lower(std::string_view s);

// Whitespace-run tokenizer; never returns empty tokens.
std::vector<std::string> split_ws(std::string_view s);

}  // namespace asrbench::utf8

#endif  // ASRBENCH_UTF8_HPP
