// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "asrbench/wav.hpp"

#include <cmath>
#include <cstring>

#include "asrbench/errors.hpp"
#include "asrbench/fsutil.hpp"

namespace asrbench::wav {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(std::string_view b, size_t off) {
  return static_cast<uint32_t>(static_cast<uint8_t>(b[off])) |
         (static_cast<uint32_t>(static_cast<uint8_t>(b[off + 1])) << 8) |
         (static_cast<uint32_t>(static_cast<uint8_t>(b[off + 2])) << 16) |
         (static_cast<uint32_t>(static_cast<uint8_t>(b[off + 3])) << 24);
}

uint16_t read_u16(std::string_view b, size_t off) {
  return static_cast<uint16_t>(static_cast<uint8_t>(b[off]) |
                               (static_cast<uint8_t>(b[off + 1]) << 8));
}

void put_u32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

int32_t clamp_round(double v, int32_t lo, int32_t hi) {
  double r = std::nearbyint(v);
  if (r < lo) return lo;
  if (r > hi) return hi;
  return static_cast<int32_t>(r);
}

}  // namespace

Audio read_bytes(std::string_view b) {
  if (b.size() < 44 || b.substr(0, 4) != "RIFF" || b.substr(8, 4) != "WAVE")
    throw AudioError("not a RIFF/WAVE file");

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  size_t data_off = 0, data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= b.size()) {
    std::string_view id = b.substr(pos, 4);
    uint32_t len = read_u32(b, pos + 4);
    size_t body = pos + 8;
    if (body + len > b.size()) {
      // Tolerate a short final data chunk (truncated writers exist).
      if (id == "data" && body < b.size()) {
        len = static_cast<uint32_t>(b.size() - body);
      } else {
        throw AudioError("truncated WAV chunk");
      }
    }
    if (id == "fmt ") {
      if (len < 16) throw AudioError("malformed fmt chunk");
      format = read_u16(b, body);
      channels = read_u16(b, body + 2);
      rate = read_u32(b, body + 4);
      bits = read_u16(b, body + 14);
      if (format == kFormatExtensible) {
        if (len < 40) throw AudioError("malformed extensible fmt chunk");
        format = read_u16(b, body + 24);  // first 2 bytes of SubFormat GUID
      }
      have_fmt = true;
    } else if (id == "data") {
      data_off = body;
      data_len = len;
      break;
    }
    pos = body + len + (len & 1);
  }

  if (!have_fmt || data_off == 0) throw AudioError("missing fmt/data chunk");
  if (channels == 0 || rate == 0) throw AudioError("bad fmt parameters");

  Audio audio;
  audio.sample_rate = static_cast<int>(rate);
  audio.channels = static_cast<int>(channels);

  const size_t bytes_per = bits / 8;
  if (bytes_per == 0) throw AudioError("bad bits per sample");
  const size_t n = data_len / bytes_per;
  audio.samples.reserve(n);
  const char* p = b.data() + data_off;

  if (format == kFormatPcm && bits == 8) {
    for (size_t i = 0; i < n; ++i) {
      auto v = static_cast<uint8_t>(p[i]);
      audio.samples.push_back((static_cast<double>(v) - 128.0) / 128.0);
    }
  } else if (format == kFormatPcm && bits == 16) {
    for (size_t i = 0; i < n; ++i) {
      int16_t v;
      std::memcpy(&v, p + 2 * i, 2);
      audio.samples.push_back(static_cast<double>(v) / 32768.0);
    }
  } else if (format == kFormatPcm && bits == 24) {
    for (size_t i = 0; i < n; ++i) {
      const auto* q = reinterpret_cast<const uint8_t*>(p + 3 * i);
      int32_t v = static_cast<int32_t>(q[0]) | (static_cast<int32_t>(q[1]) << 8) |
                  (static_cast<int32_t>(q[2]) << 16);
      if (v & 0x800000) v |= ~0xFFFFFF;
      audio.samples.push_back(static_cast<double>(v) / 8388608.0);
    }
  } else if (format == kFormatPcm && bits == 32) {
    for (size_t i = 0; i < n; ++i) {
      int32_t v;
      std::memcpy(&v, p + 4 * i, 4);
      audio.samples.push_back(static_cast<double>(v) / 2147483648.0);
    }
  } else if (format == kFormatFloat && bits == 32) {
    for (size_t i = 0; i < n; ++i) {
      float v;
      std::memcpy(&v, p + 4 * i, 4);
      audio.samples.push_back(static_cast<double>(v));
    }
  } else if (format == kFormatFloat && bits == 64) {
    for (size_t i = 0; i < n; ++i) {
      double v;
      std::memcpy(&v, p + 8 * i, 8);
      audio.samples.push_back(v);
    }
  } else {
    throw AudioError("unsupported WAV encoding: format " +
                     std::to_string(format) + ", " + std::to_string(bits) +
                     " bits");
  }

  // Drop a trailing partial frame rather than failing the whole file.
  audio.samples.resize(audio.frames() * static_cast<size_t>(channels));
  return audio;
}

Audio read(const std::filesystem::path& path) {
  std::string bytes;
  try {
    bytes = fsutil::read_file(path);
  } catch (const IoError& e) {
    throw AudioError(e.what());
  }
  try {
    return read_bytes(bytes);
  } catch (const AudioError& e) {
    throw AudioError(path.string() + ": " + e.what());
  }
}

std::string write_bytes(const Audio& audio, SampleFormat format) {
  uint16_t bits = 16, fmt_code = kFormatPcm;
  switch (format) {
    case SampleFormat::kPcm8:
      bits = 8;
      break;
    case SampleFormat::kPcm16:
      bits = 16;
      break;
    case SampleFormat::kPcm24:
      bits = 24;
      break;
    case SampleFormat::kPcm32:
      bits = 32;
      break;
    case SampleFormat::kFloat32:
      bits = 32;
      fmt_code = kFormatFloat;
      break;
    case SampleFormat::kFloat64:
      bits = 64;
      fmt_code = kFormatFloat;
      break;
  }
  const auto channels = static_cast<uint16_t>(audio.channels);
  const uint32_t bytes_per = bits / 8;
  const uint32_t block_align = channels * bytes_per;
  const auto data_len = static_cast<uint32_t>(audio.samples.size() * bytes_per);

  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32(out, 36 + data_len + (data_len & 1));
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, fmt_code);
  put_u16(out, channels);
  put_u32(out, static_cast<uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<uint32_t>(audio.sample_rate) * block_align);
  put_u16(out, static_cast<uint16_t>(block_align));
  put_u16(out, bits);
  out += "data";
  put_u32(out, data_len);

  for (double s : audio.samples) {
    switch (format) {
      case SampleFormat::kPcm8:
        out.push_back(static_cast<char>(
            static_cast<uint8_t>(clamp_round(s * 128.0 + 128.0, 0, 255))));
        break;
      case SampleFormat::kPcm16: {
        int32_t v = clamp_round(s * 32768.0, -32768, 32767);
        out.push_back(static_cast<char>(v & 0xFF));
        out.push_back(static_cast<char>((v >> 8) & 0xFF));
        break;
      }
      case SampleFormat::kPcm24: {
        int32_t v = clamp_round(s * 8388608.0, -8388608, 8388607);
        out.push_back(static_cast<char>(v & 0xFF));
        out.push_back(static_cast<char>((v >> 8) & 0xFF));
        out.push_back(static_cast<char>((v >> 16) & 0xFF));
        break;
      }
      case SampleFormat::kPcm32: {
        double scaled = s * 2147483648.0;
        double r = std::nearbyint(scaled);
        int32_t v;
        if (r >= 2147483647.0)
          v = 2147483647;
        else if (r <= -2147483648.0)
          v = INT32_MIN;
        else
          v = static_cast<int32_t>(r);
        char buf[4];
        std::memcpy(buf, &v, 4);
        out.append(buf, 4);
        break;
      }
      case SampleFormat::kFloat32: {
        auto v = static_cast<float>(s);
        char buf[4];
        std::memcpy(buf, &v, 4);
        out.append(buf, 4);
        break;
      }
      case SampleFormat::kFloat64: {
        char buf[8];
        std::memcpy(buf, &s, 8);
        out.append(buf, 8);
        break;
      }
    }
  }
  if (data_len & 1) out.push_back('\0');
  return out;
}

void write(const std::filesystem::path& path, const Audio& audio,
           SampleFormat format) {
  fsutil::atomic_write(path, write_bytes(audio, format));
}

}  // namespace asrbench::wav
