// include/pas/audio.h

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

#ifndef PAS_AUDIO_H_
#define PAS_AUDIO_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pas {

// Mono PCM samples at a fixed rate.  Amplitudes are nominally in [-1, 1] but
// are not clamped in memory; clamping happens on WAV export only.
// Immutable after construction.
class AudioBuffer {
 public:
  // Throws InvalidConfig if sample_rate <= 0 or any sample is not finite.
  AudioBuffer(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  int sample_rate() const noexcept { return sample_rate_; }
  double operator[](std::size_t i) const { return samples_[i]; }

  // Moves the sample storage out; the buffer is left empty.
  std::vector<double> release() && { return std::move(samples_); }

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

// Half-open window [start, start + length) into a parent buffer.
struct SegmentSpan {
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t end() const noexcept { return start + length; }
};

// Borrowed view of `span` inside `samples`.  OutOfRange unless length >= 1 and
// the window fits.
std::span<const double> view_segment(std::span<const double> samples,
                                     SegmentSpan span);

// Copy of samples [start, start + length).  OutOfRange when the window does not
// fit in `buf` or length is zero.
AudioBuffer sample_segment(const AudioBuffer &buf, std::size_t length,
                           std::size_t start);

// `buf` tiled end to end and truncated to exactly `length` samples.
AudioBuffer loop_pad(const AudioBuffer &buf, std::size_t length);

// Returns `buf` unchanged if it already has at least `length` samples,
// otherwise loop_pad(buf, length).
AudioBuffer ensure_min_length(const AudioBuffer &buf, std::size_t length);

// Converts a duration to a whole number of samples.  InvalidConfig if the
// product is negative or not an integer (within 1e-6 of one).
std::size_t seconds_to_samples(double seconds, int sample_rate);

}  // namespace pas

#endif  // PAS_AUDIO_H_
