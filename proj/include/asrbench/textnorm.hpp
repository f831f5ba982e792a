// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_TEXTNORM_HPP
#define ASRBENCH_TEXTNORM_HPP

#include <filesystem>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace asrbench::textnorm {

enum class Method { kBlanks, kLowercase, kPunctuation, kLexicon, kTags };

const char* method_name(Method m);
Method method_from_name(std::string_view name);  // throws ConfigError

// Surface form (lowercase single token) -> replacement; "" deletes.
using Lexicon = std::map<std::string, std::string>;

// Reads a lexicon file: UTF-8 TSV, two columns (surface, replacement),
// '#' comment lines, empty second column = deletion.
Lexicon load_lexicon(const std::filesystem::path& path);

// The composable normalization stack applied identically to references and
// hypotheses before scoring.
class NormalizationConfig {
 public:
  // `name` is "none", "all", one method name, or a comma-separated method
  // list. "all" expands to tags,lexicon,lowercase,punctuation,blanks.
  // Throws ConfigError on duplicates, unknown names, a malformed tag
  // pattern, or a lexicon that cannot reach a fixpoint (a replacement that
  // is itself a key).
  static NormalizationConfig from_name(std::string_view name,
                                       Lexicon lexicon = {},
                                       std::string tag_pattern = "<[^<>]+>");

  static NormalizationConfig all(Lexicon lexicon = {},
                                 std::string tag_pattern = "<[^<>]+>");
  static NormalizationConfig none();

  const std::string& name() const { return name_; }
  const std::vector<Method>& methods() const { return methods_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const std::string& tag_pattern() const { return tag_pattern_; }

  // Applies the method list in order, repeating until the text is stable,
  // so the composed stack is idempotent even when punctuation removal
  // exposes new lexicon matches.
  std::string apply(std::string_view text) const;

 private:
  NormalizationConfig() = default;

  std::string name_;
  std::vector<Method> methods_;
  Lexicon lexicon_;
  std::string tag_pattern_;
  std::regex tag_regex_;
  bool has_tags_ = false;
};

// The five methods. Each is idempotent on its own.
std::string remove_blanks(std::string_view text);
std::string lowercase(std::string_view text);
std::string remove_punctuation(std::string_view text);
// Unchanged when nothing matches (identity under an empty lexicon).
std::string lexicon_normalize(std::string_view text, const Lexicon& lexicon);
std::string remove_tags(std::string_view text, const std::regex& tag_pattern);

}  // namespace asrbench::textnorm

#endif  // ASRBENCH_TEXTNORM_HPP
