// include/pas/wav_io.h

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

#ifndef PAS_WAV_IO_H_
#define PAS_WAV_IO_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pas/audio.h"

namespace pas {

// int16 <-> float amplitude scale.  Symmetric power-of-two divisor, so -32768
// maps to exactly -1.0 and +1.0 saturates at 32767 on export.
inline constexpr double kPcm16Scale = 32768.0;

// Reads a RIFF/WAVE file holding mono 16-bit PCM (format code 1).  Chunks other
// than `fmt ` and `data` are skipped.  Any sample rate is accepted here;
// callers that require a specific rate check AudioBuffer::sample_rate().
//
// Errors: NotFound, UnsupportedFormat (multi-channel, non-PCM, bit depth other
// than 16), CorruptHeader (truncated or malformed chunks).
AudioBuffer load_wav(const std::filesystem::path &path);

// Writes a canonical 44-byte-header mono 16-bit PCM file.  Samples are clamped
// to [-1, 1] and rounded to the nearest int16 step.  Errors: IoError.
void save_wav(const AudioBuffer &buf, const std::filesystem::path &path);

// The int16 codes save_wav would write for `samples`.
std::vector<std::int16_t> quantize_pcm16(std::span<const double> samples);

// Serialized file image, exactly as save_wav writes it.
std::vector<std::uint8_t> encode_wav(const AudioBuffer &buf);
AudioBuffer decode_wav(std::span<const std::uint8_t> bytes);

}  // namespace pas

#endif  // PAS_WAV_IO_H_
