// src/audio.cc

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

#include "pas/audio.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pas/error.h"

namespace pas {

AudioBuffer::AudioBuffer(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ <= 0)
    throw Error(Errc::kInvalidConfig,
                "sample_rate must be positive, got " +
                    std::to_string(sample_rate_));
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]))
      throw Error(Errc::kInvalidConfig,
                  "non-finite sample at index " + std::to_string(i));
  }
}

std::span<const double> view_segment(std::span<const double> samples,
                                     SegmentSpan span) {
  if (span.length == 0)
    throw Error(Errc::kOutOfRange, "segment length must be >= 1");
  if (span.start > samples.size() || span.length > samples.size() - span.start)
    throw Error(Errc::kOutOfRange,
                "segment [" + std::to_string(span.start) + ", " +
                    std::to_string(span.start + span.length) +
                    ") exceeds buffer of " + std::to_string(samples.size()) +
                    " samples");
  return samples.subspan(span.start, span.length);
}

AudioBuffer sample_segment(const AudioBuffer &buf, std::size_t length,
                           std::size_t start) {
  auto seg = view_segment(buf.samples(), {start, length});
  return AudioBuffer(std::vector<double>(seg.begin(), seg.end()),
                     buf.sample_rate());
}

AudioBuffer loop_pad(const AudioBuffer &buf, std::size_t length) {
  if (length == 0)
    throw Error(Errc::kOutOfRange, "loop_pad length must be >= 1");
  if (buf.empty())
    throw Error(Errc::kOutOfRange, "cannot loop-pad an empty buffer");
  std::vector<double> out;
  out.reserve(length);
  auto src = buf.samples();
  while (out.size() < length) {
    std::size_t take = std::min(src.size(), length - out.size());
    out.insert(out.end(), src.begin(), src.begin() + take);
  }
  return AudioBuffer(std::move(out), buf.sample_rate());
}

AudioBuffer ensure_min_length(const AudioBuffer &buf, std::size_t length) {
  if (buf.size() >= length) return buf;
  return loop_pad(buf, length);
}

std::size_t seconds_to_samples(double seconds, int sample_rate) {
  const double exact = seconds * sample_rate;
  const double rounded = std::round(exact);
  if (!std::isfinite(exact) || rounded < 0 || std::abs(exact - rounded) > 1e-6)
    throw Error(Errc::kInvalidConfig,
                std::to_string(seconds) + " s is not a whole number of samples at " +
                    std::to_string(sample_rate) + " Hz");
  return static_cast<std::size_t>(rounded);
}

}  // namespace pas
