// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_WAV_HPP
#define ASRBENCH_WAV_HPP

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace asrbench::wav {

// Decoded audio, interleaved samples scaled to [-1, 1) floats.
struct Audio {
  int sample_rate = 0;
  int channels = 0;
  std::vector<double> samples;  // interleaved

  size_t frames() const {
    return channels > 0 ? samples.size() / static_cast<size_t>(channels) : 0;
  }
};

enum class SampleFormat { kPcm8, kPcm16, kPcm24, kPcm32, kFloat32, kFloat64 };

// Reads a RIFF/WAVE file (PCM 8/16/24/32, IEEE float 32/64, EXTENSIBLE).
// Throws AudioError on anything undecodable.
Audio read(const std::filesystem::path& path);
Audio read_bytes(std::string_view bytes);

// Serializes audio. The header layout is canonical (fixed chunk order, no
// metadata), so identical samples produce identical bytes.
std::string write_bytes(const Audio& audio, SampleFormat format);
void write(const std::filesystem::path& path, const Audio& audio,
           SampleFormat format);

}  // namespace asrbench::wav

#endif  // ASRBENCH_WAV_HPP
