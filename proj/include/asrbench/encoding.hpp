// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_ENCODING_HPP
#define ASRBENCH_ENCODING_HPP

#include <string>
#include <string_view>

namespace asrbench::encoding {

// Source encodings the curation pipeline can convert to UTF-8. The legacy
// pair covers Polish transcript archives.
enum class Source { kUtf8, kWindows1250, kIso8859_2 };

Source source_from_name(std::string_view name);  // throws ConfigError
const char* source_name(Source s);

// Converts to UTF-8. For kUtf8 the input is validated and returned as-is;
// invalid byte sequences raise CurationError (a failed declared-encoding
// conversion), as do bytes undefined in the legacy codepages.
std::string to_utf8(std::string_view text, Source source);

}  // namespace asrbench::encoding

#endif  // ASRBENCH_ENCODING_HPP
