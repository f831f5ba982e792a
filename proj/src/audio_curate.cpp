// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/audio_curate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"

namespace asrbench::audio {

namespace {

constexpr int kMinSourceRate = 8000;
constexpr double kKaiserBeta = 10.0;
constexpr int kBaseHalfTaps = 24;

// Modified Bessel function of the first kind, order zero (series form).
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double sinc(double v) {
  if (std::abs(v) < 1e-12) return 1.0;
  double pv = std::numbers::pi * v;
  return std::sin(pv) / pv;
}

}  // namespace

std::vector<double> resample(const std::vector<double>& mono, int in_rate,
                             int out_rate) {
  if (in_rate == out_rate) return mono;
  if (mono.empty()) return {};

  const double ratio = static_cast<double>(out_rate) / in_rate;
  // Downsampling needs the lowpass at the output Nyquist and a wider
  // kernel; 0.945 leaves a transition band before the cutoff.
  const double cutoff = 0.945 * std::min(1.0, ratio);
  const double half_width = kBaseHalfTaps / std::min(1.0, ratio);
  const double inv_i0_beta = 1.0 / bessel_i0(kKaiserBeta);

  const auto n_in = static_cast<int64_t>(mono.size());
  const auto n_out = static_cast<int64_t>(
      std::llround(static_cast<double>(n_in) * ratio));

  std::vector<double> out(static_cast<size_t>(n_out));
  for (int64_t n = 0; n < n_out; ++n) {
    const double t = static_cast<double>(n) / ratio;
    const auto k_lo =
        std::max<int64_t>(0, static_cast<int64_t>(std::ceil(t - half_width)));
    const auto k_hi = std::min<int64_t>(
        n_in - 1, static_cast<int64_t>(std::floor(t + half_width)));
    double acc = 0.0;
    for (int64_t k = k_lo; k <= k_hi; ++k) {
      const double u = static_cast<double>(k) - t;
      const double w_arg = u / half_width;
      const double window =
          bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - w_arg * w_arg))) *
          inv_i0_beta;
      acc += mono[static_cast<size_t>(k)] * cutoff * sinc(cutoff * u) * window;
    }
    out[static_cast<size_t>(n)] = acc;
  }
  return out;
}

std::vector<double> downmix_mono(const wav::Audio& audio) {
  if (audio.channels == 1) return audio.samples;
  const size_t frames = audio.frames();
  const auto ch = static_cast<size_t>(audio.channels);
  std::vector<double> mono(frames);
  for (size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (size_t c = 0; c < ch; ++c) sum += audio.samples[f * ch + c];
    mono[f] = sum / static_cast<double>(ch);
  }
  return mono;
}

void normalize_peak(std::vector<double>& mono, double peak_dbfs) {
  double peak = 0.0;
  for (double s : mono) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) return;  // silence: gain is undefined, pass through

  const double target = std::pow(10.0, peak_dbfs / 20.0);
  const double diff_db = 20.0 * std::log10(peak / target);
  if (std::abs(diff_db) < 0.01) return;

  const double gain = target / peak;
  for (double& s : mono) s *= gain;
}

wav::Audio curate_to_audio(const wav::Audio& input,
                           const AudioTarget& target) {
  if (input.sample_rate < kMinSourceRate)
    throw AudioError("source sampling rate " +
                     std::to_string(input.sample_rate) +
                     " Hz rejected: below 8000 Hz");
  std::vector<double> mono = downmix_mono(input);
  mono = resample(mono, input.sample_rate, target.sample_rate);
  normalize_peak(mono, target.peak_dbfs);

  wav::Audio out;
  out.sample_rate = target.sample_rate;
  out.channels = 1;
  out.samples = std::move(mono);
  return out;
}

CuratedAudio curate_audio(const std::filesystem::path& input_path,
                          const std::filesystem::path& output_path,
                          const AudioTarget& target) {
  wav::Audio input = wav::read(input_path);
  wav::Audio curated = curate_to_audio(input, target);
  wav::write(output_path, curated, wav::SampleFormat::kPcm16);

  CuratedAudio result;
  result.path = output_path;
  result.duration_samples = static_cast<int64_t>(curated.samples.size());
  result.duration_seconds = static_cast<double>(result.duration_samples) /
                            target.sample_rate;
  result.orig_rate = input.sample_rate;
  return result;
}

std::vector<Segment> segment_audio(const wav::Audio& input,
                                   const std::vector<SegmentSpec>& alignments,
                                   const AudioTarget& target) {
  const double duration =
      input.sample_rate > 0
          ? static_cast<double>(input.frames()) / input.sample_rate
          : 0.0;

  for (size_t i = 0; i < alignments.size(); ++i) {
    const auto& a = alignments[i];
    if (!(a.start_s < a.end_s))
      throw AlignmentError("alignment interval " + std::to_string(i) +
                           " inverted or empty");
    if (a.start_s < 0.0 || a.end_s > duration + 1e-9)
      throw AlignmentError("alignment interval " + std::to_string(i) +
                           " outside audio duration");
  }
  std::vector<size_t> order(alignments.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return alignments[a].start_s < alignments[b].start_s;
  });
  for (size_t i = 1; i < order.size(); ++i) {
    if (alignments[order[i]].start_s < alignments[order[i - 1]].end_s - 1e-9)
      throw AlignmentError("alignment interval " + std::to_string(order[i]) +
                           " overlaps the previous one");
  }

  std::vector<double> mono = downmix_mono(input);
  std::vector<Segment> segments;
  segments.reserve(alignments.size());
  for (const auto& a : alignments) {
    auto s0 = static_cast<int64_t>(std::llround(a.start_s * input.sample_rate));
    auto s1 = static_cast<int64_t>(std::llround(a.end_s * input.sample_rate));
    s0 = std::clamp<int64_t>(s0, 0, static_cast<int64_t>(mono.size()));
    s1 = std::clamp<int64_t>(s1, s0, static_cast<int64_t>(mono.size()));

    wav::Audio slice;
    slice.sample_rate = input.sample_rate;
    slice.channels = 1;
    slice.samples.assign(mono.begin() + s0, mono.begin() + s1);

    Segment seg;
    seg.audio = curate_to_audio(slice, target);
    seg.transcript = a.transcript;
    segments.push_back(std::move(seg));
  }
  return segments;
}

}  // namespace asrbench::audio
