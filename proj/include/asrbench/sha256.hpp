// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_SHA256_HPP
#define ASRBENCH_SHA256_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace asrbench {

// FIPS 180-4 SHA-256, self-contained. Used for content-addressed cache keys
// and run reproducibility hashes; lowercase hex digest.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, size_t len);
  void update(std::string_view s) { update(s.data(), s.size()); }
  // Finalizes and returns the 64-char hex digest. The object is spent.
  std::string hex_digest();

 private:
  void process_block(const uint8_t* block);

  uint32_t state_[8];
  uint64_t total_len_ = 0;
  uint8_t buffer_[64];
  size_t buffer_len_ = 0;
};

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace asrbench

#endif  // ASRBENCH_SHA256_HPP
