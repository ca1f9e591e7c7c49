// src/wav_io.cc

// Copyright 2026  The PAS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "pas/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "pas/error.h"

namespace pas {

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

void put_u16(std::vector<std::uint8_t> &out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
}

void put_tag(std::vector<std::uint8_t> &out, const char *tag) {
  out.insert(out.end(), tag, tag + 4);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char *tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

}  // namespace

std::vector<std::int16_t> quantize_pcm16(std::span<const double> samples) {
  std::vector<std::int16_t> codes(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double v = std::nearbyint(std::clamp(samples[i], -1.0, 1.0) * kPcm16Scale);
    codes[i] = static_cast<std::int16_t>(std::clamp(v, -32768.0, 32767.0));
  }
  return codes;
}

std::vector<std::uint8_t> encode_wav(const AudioBuffer &buf) {
  auto codes = quantize_pcm16(buf.samples());
  const auto data_bytes = static_cast<std::uint32_t>(codes.size() * 2);
  const auto rate = static_cast<std::uint32_t>(buf.sample_rate());
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);         // channels
  put_u32(out, rate);
  put_u32(out, rate * 2);  // byte rate
  put_u16(out, 2);         // block align
  put_u16(out, 16);        // bits per sample
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (std::int16_t c : codes) put_u16(out, static_cast<std::uint16_t>(c));
  return out;
}

AudioBuffer decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
    throw Error(Errc::kCorruptHeader, "missing RIFF/WAVE preamble");

  bool have_fmt = false;
  std::uint32_t sample_rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = read_u32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (tag_is(bytes, pos, "fmt ")) {
      if (chunk_size < 16 || body + 16 > bytes.size())
        throw Error(Errc::kCorruptHeader, "truncated fmt chunk");
      const std::uint16_t format = read_u16(bytes, body);
      const std::uint16_t channels = read_u16(bytes, body + 2);
      sample_rate = read_u32(bytes, body + 4);
      const std::uint16_t bits = read_u16(bytes, body + 14);
      if (format != kFormatPcm)
        throw Error(Errc::kUnsupportedFormat,
                    "format code " + std::to_string(format) + " is not PCM");
      if (channels != 1)
        throw Error(Errc::kUnsupportedFormat,
                    std::to_string(channels) + " channels; only mono is supported");
      if (bits != 16)
        throw Error(Errc::kUnsupportedFormat,
                    std::to_string(bits) + "-bit samples; only 16-bit is supported");
      if (sample_rate == 0 || sample_rate > 0x7fffffffu)
        throw Error(Errc::kCorruptHeader, "invalid sample rate");
      have_fmt = true;
    } else if (tag_is(bytes, pos, "data")) {
      if (!have_fmt)
        throw Error(Errc::kCorruptHeader, "data chunk precedes fmt chunk");
      if (chunk_size % 2 != 0 || chunk_size > bytes.size() - body)
        throw Error(Errc::kCorruptHeader, "data chunk size " +
                                              std::to_string(chunk_size) +
                                              " inconsistent with file");
      std::vector<double> samples(chunk_size / 2);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        auto code = static_cast<std::int16_t>(read_u16(bytes, body + 2 * i));
        samples[i] = code / kPcm16Scale;
      }
      return AudioBuffer(std::move(samples), static_cast<int>(sample_rate));
    }
    // RIFF chunks are word aligned.
    std::size_t next = body + chunk_size + (chunk_size & 1u);
    if (next <= pos) break;
    pos = next;
  }
  throw Error(Errc::kCorruptHeader, have_fmt ? "no data chunk" : "no fmt chunk");
}

AudioBuffer load_wav(const std::filesystem::path &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(Errc::kNotFound, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_wav(bytes);
  } catch (const Error &e) {
    throw Error(e.code(), path.string() + ": " +
                              std::string(e.what()).substr(
                                  std::strlen(errc_name(e.code())) + 2));
  }
}

void save_wav(const AudioBuffer &buf, const std::filesystem::path &path) {
  auto bytes = encode_wav(buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIoError, "cannot open " + path.string());
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::kIoError, "write failed: " + path.string());
}

}  // namespace pas
