// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_AUDIO_CURATE_HPP
#define ASRBENCH_AUDIO_CURATE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "asrbench/wav.hpp"

namespace asrbench::audio {

// Unified output format: WAV, mono, 16-bit linear, 16 kHz, peaked at
// -3 dBFS.
struct AudioTarget {
  int sample_rate = 16000;
  int bits = 16;
  double peak_dbfs = -3.0;
};

struct CuratedAudio {
  std::filesystem::path path;  // empty for in-memory results
  int64_t duration_samples = 0;
  double duration_seconds = 0.0;
  int orig_rate = 0;
};

// Bandlimited rational resampling via a Kaiser-windowed sinc kernel.
// Identity when the rates already match.
std::vector<double> resample(const std::vector<double>& mono, int in_rate,
                             int out_rate);

// Channel-mean downmix of interleaved samples.
std::vector<double> downmix_mono(const wav::Audio& audio);

// Scales so the peak magnitude hits 10^(dbfs/20) of full scale. Digital
// silence passes through unscaled; a peak already within 0.01 dB of the
// target is left untouched so curation is byte-stable on its own output.
void normalize_peak(std::vector<double>& mono, double peak_dbfs);

// Full audio curation: decode, downmix, resample, peak-normalize, quantize.
// Rejects source rates below 8 kHz and anything undecodable (AudioError).
wav::Audio curate_to_audio(const wav::Audio& input, const AudioTarget& target);
CuratedAudio curate_audio(const std::filesystem::path& input_path,
                          const std::filesystem::path& output_path,
                          const AudioTarget& target = {});

struct SegmentSpec {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string transcript;
};

struct Segment {
  wav::Audio audio;  // curated per the target
  std::string transcript;
};

// Slices by time-alignment annotations, then curates each slice. Intervals
// must lie within the audio, run forward, and not overlap once sorted;
// violations raise AlignmentError naming the interval index.
std::vector<Segment> segment_audio(const wav::Audio& input,
                                   const std::vector<SegmentSpec>& alignments,
                                   const AudioTarget& target = {});

}  // namespace asrbench::audio

#endif  // ASRBENCH_AUDIO_CURATE_HPP
