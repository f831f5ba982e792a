// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/textnorm.hpp"

#include <algorithm>

#include "asrbench/errors.hpp"
#include "asrbench/tsv.hpp"
#include "asrbench/utf8.hpp"

namespace asrbench::textnorm {

namespace {

// Rebuilds a string from tokens after a token-level edit. Collapsed output
// is the contract once any token changed.
std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kBlanks:
      return "blanks";
    case Method::kLowercase:
      return "lowercase";
    case Method::kPunctuation:
      return "punctuation";
    case Method::kLexicon:
      return "lexicon";
    case Method::kTags:
      return "tags";
  }
  return "?";
}

Method method_from_name(std::string_view name) {
  if (name == "blanks") return Method::kBlanks;
  if (name == "lowercase") return Method::kLowercase;
  if (name == "punctuation") return Method::kPunctuation;
  if (name == "lexicon") return Method::kLexicon;
  if (name == "tags") return Method::kTags;
  throw ConfigError("unknown normalization method: " + std::string(name));
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  tsv::Table table;
  // Lexicon files have no header row; parse manually via the comment-aware
  // reader by prepending none -- simplest is a direct read.
  auto raw = tsv::read_file(path, /*skip_comments=*/true);
  Lexicon lex;
  auto add = [&lex](const std::vector<std::string>& cells) {
    if (cells.empty() || cells[0].empty()) return;
    std::string surface = utf8::lower(cells[0]);
    std::string replacement = cells.size() > 1 ? cells[1] : "";
    lex[surface] = replacement;
  };
  // read_file treats the first non-comment line as a header; it is data here.
  add(raw.header);
  for (const auto& row : raw.rows) add(row);
  return lex;
}

std::string remove_blanks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool seen_token = false;
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i;
    char32_t cp = utf8::decode(text, i);
    if (utf8::is_space(cp)) {
      pending_space = seen_token;
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      seen_token = true;
      out.append(text.substr(start, i - start));
    }
  }
  return out;
}

std::string lowercase(std::string_view text) { return utf8::lower(text); }

std::string remove_punctuation(std::string_view text) {
  std::string spaced;
  spaced.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i;
    char32_t cp = utf8::decode(text, i);
    if (utf8::is_punct(cp)) {
      spaced.push_back(' ');
    } else {
      spaced.append(text.substr(start, i - start));
    }
  }
  return remove_blanks(spaced);
}

std::string lexicon_normalize(std::string_view text, const Lexicon& lexicon) {
  if (lexicon.empty()) return std::string(text);
  auto tokens = utf8::split_ws(text);
  bool changed = false;
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (auto& tok : tokens) {
    auto it = lexicon.find(utf8::lower(tok));
    if (it == lexicon.end()) {
      kept.push_back(std::move(tok));
    } else {
      changed = true;
      if (!it->second.empty()) kept.push_back(it->second);
    }
  }
  if (!changed) return std::string(text);
  return join_tokens(kept);
}

std::string remove_tags(std::string_view text, const std::regex& tag_pattern) {
  auto tokens = utf8::split_ws(text);
  bool changed = false;
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (auto& tok : tokens) {
    if (std::regex_match(tok, tag_pattern)) {
      changed = true;
    } else {
      kept.push_back(std::move(tok));
    }
  }
  if (!changed) return std::string(text);
  return join_tokens(kept);
}

NormalizationConfig NormalizationConfig::from_name(std::string_view name,
                                                   Lexicon lexicon,
                                                   std::string tag_pattern) {
  NormalizationConfig cfg;
  cfg.name_ = std::string(name);
  cfg.lexicon_ = std::move(lexicon);
  cfg.tag_pattern_ = std::move(tag_pattern);

  if (name == "none" || name.empty()) {
    cfg.name_ = "none";
  } else if (name == "all") {
    cfg.methods_ = {Method::kTags, Method::kLexicon, Method::kLowercase,
                    Method::kPunctuation, Method::kBlanks};
  } else {
    size_t start = 0;
    while (start <= name.size()) {
      size_t comma = name.find(',', start);
      std::string_view part = name.substr(
          start, comma == std::string_view::npos ? name.size() - start
                                                 : comma - start);
      if (!part.empty()) cfg.methods_.push_back(method_from_name(part));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    auto sorted = cfg.methods_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConfigError("duplicate normalization method in: " +
                        std::string(name));
  }

  for (const auto& [key, value] : cfg.lexicon_) {
    if (key.empty())
      throw ConfigError("lexicon: empty surface form");
    if (utf8::split_ws(key).size() != 1 || utf8::lower(key) != key)
      throw ConfigError("lexicon: surface form must be a lowercased single "
                        "token: '" + key + "'");
    if (!value.empty() && cfg.lexicon_.count(utf8::lower(value)))
      throw ConfigError("lexicon: replacement '" + value +
                        "' is itself a surface form; no fixpoint");
  }

  cfg.has_tags_ = std::find(cfg.methods_.begin(), cfg.methods_.end(),
                            Method::kTags) != cfg.methods_.end();
  if (cfg.has_tags_) {
    try {
      cfg.tag_regex_ = std::regex(cfg.tag_pattern_);
    } catch (const std::regex_error& e) {
      throw ConfigError("malformed tag pattern '" + cfg.tag_pattern_ +
                        "': " + e.what());
    }
  }
  return cfg;
}

NormalizationConfig NormalizationConfig::all(Lexicon lexicon,
                                             std::string tag_pattern) {
  return from_name("all", std::move(lexicon), std::move(tag_pattern));
}

NormalizationConfig NormalizationConfig::none() { return from_name("none"); }

std::string NormalizationConfig::apply(std::string_view text) const {
  std::string cur(text);
  // One pass is almost always enough; punctuation removal can expose new
  // lexicon matches ("um," -> "um"), so repeat until stable. The lexicon
  // fixpoint check above bounds this at a handful of passes.
  for (int pass = 0; pass < 8; ++pass) {
    std::string next = cur;
    for (Method m : methods_) {
      switch (m) {
        case Method::kBlanks:
          next = remove_blanks(next);
          break;
        case Method::kLowercase:
          next = lowercase(next);
          break;
        case Method::kPunctuation:
          next = remove_punctuation(next);
          break;
        case Method::kLexicon:
          next = lexicon_normalize(next, lexicon_);
          break;
        case Method::kTags:
          next = remove_tags(next, tag_regex_);
          break;
      }
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace asrbench::textnorm
