// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_FSUTIL_HPP
#define ASRBENCH_FSUTIL_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace asrbench::fsutil {

std::string read_file(const std::filesystem::path& path);

// Write-to-temp-then-rename so a crashed run never leaves a partial file.
// Parent directories are created as needed.
void atomic_write(const std::filesystem::path& path, std::string_view data);

}  // namespace asrbench::fsutil

#endif  // ASRBENCH_FSUTIL_HPP
