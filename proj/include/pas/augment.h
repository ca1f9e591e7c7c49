// include/pas/augment.h

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

#ifndef PAS_AUGMENT_H_
#define PAS_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pas/audio.h"
#include "pas/rng.h"

namespace pas {

// Partial additive speech (PAS) and the traditional full-overlap additive
// noise baseline.
//
// PAS builds an output of exactly `noise_len` samples from a noise clip and a
// shorter speech segment placed at a random position:
//
//   [0, pos)                   gain * noise            (noise only)
//   [pos, pos + speech_len)    speech + gain * noise
//   [pos + speech_len, end)    gain * noise            (noise only)
//
// SNR is 10*log10(P_speech / P_noise) with P the mean-square amplitude.  The
// noise power is measured over the overlap region only, since that is the
// only place where both signals are present.

struct PasConfig {
  std::size_t noise_len = 0;       // output length, samples
  std::size_t speech_min_len = 0;  // shortest speech segment, samples
  double snr_min = 0.0;            // dB
  double snr_max = 20.0;           // dB
  double mix_probability = 0.75;
  std::uint64_t master_seed = 0;

  // Throws InvalidConfig naming the violated field.
  void validate() const;

  // 3.2 s noise clips, speech of at least 1 s, SNR in [0, 20] dB, three out of
  // four utterances augmented.  Throws InvalidConfig if the durations are not
  // whole sample counts at `sample_rate`.
  static PasConfig defaults(int sample_rate);
};

// Realized draws for one augmented utterance; together with the inputs this
// is enough to re-synthesize the output bit for bit.
struct PasPlacement {
  std::size_t speech_len = 0;
  std::size_t speech_pos = 0;
  double snr_db = 0.0;
  std::size_t noise_id = 0;
  std::size_t noise_offset = 0;
  std::size_t speech_offset = 0;
  double noise_gain = 0.0;  // filled in by the mixing step
};

struct AugmentedSample {
  AudioBuffer audio;
  std::optional<PasPlacement> placement;  // absent: unaugmented pass-through
  std::size_t crop_offset = 0;            // first source sample used
};

enum class MixMethod { kPartial, kTraditional };

std::string_view method_name(MixMethod method);
// Accepts "pas" / "partial" and "traditional" / "tan".  InvalidConfig otherwise.
MixMethod parse_method(std::string_view name);

// Mean-square amplitude.  DegenerateSignal for empty or all-zero input.
double signal_power(std::span<const double> samples);
inline double signal_power(const AudioBuffer &buf) {
  return signal_power(buf.samples());
}

// Linear noise gain g such that 10*log10(speech_power / (g^2 * noise_power))
// equals snr_db.  DegenerateSignal unless both powers are positive and finite.
double snr_gain(double speech_power, double noise_power, double snr_db);

// snr_gain over the powers of the two given spans.
double mixing_gain(std::span<const double> speech,
                   std::span<const double> noise_overlap, double snr_db);

// out[i] = x[i] + g * n[i] over the whole of x, with g measured against the
// first x.size() samples of n.  n must be at least as long as x (loop-pad it
// first).  Errors: OutOfRange, DegenerateSignal, UnsupportedFormat on a
// sample-rate mismatch.
AudioBuffer apply_traditional(const AudioBuffer &x, const AudioBuffer &n,
                              double snr_db);

// Synthesizes one PAS output from raw speech `x` and noise `n` using the given
// draws.  The returned placement carries the applied noise gain.
AugmentedSample apply_pas(const AudioBuffer &x, const AudioBuffer &n,
                          const PasConfig &cfg, const PasPlacement &draws);

// Noise clips with every entry loop-padded to at least `min_len` samples.
class NoiseCatalog {
 public:
  // EmptyCatalog if `clips` is empty.
  NoiseCatalog(std::vector<AudioBuffer> clips, std::size_t min_len);

  std::size_t size() const noexcept { return clips_.size(); }
  const AudioBuffer &operator[](std::size_t i) const { return clips_[i]; }
  std::span<const std::size_t> lengths() const noexcept { return lengths_; }
  std::size_t min_len() const noexcept { return min_len_; }

 private:
  std::vector<AudioBuffer> clips_;
  std::vector<std::size_t> lengths_;
  std::size_t min_len_;
};

// The per-utterance Bernoulli(mix_probability) decision.  Consumes one draw.
bool draw_mix_decision(const PasConfig &cfg, SampleStream &stream);

// Draw order: noise id, noise offset, speech length, speech offset, SNR,
// speech position.  Each clip in `noise_lengths` must hold at least
// cfg.noise_len samples.  Speech offsets are uniform over
// [0, max(speech_len_available, L_s) - L_s]; if the drawn speech length
// exceeds the available speech the offset is 0 and the caller must loop-pad
// the speech to that length.
PasPlacement draw_placement(const PasConfig &cfg, SampleStream &stream,
                            std::span<const std::size_t> noise_lengths,
                            std::size_t speech_available);

// Augments utterance `index` with randomness from SampleStream(master_seed,
// index) only.  Speech shorter than noise_len is loop-padded first.  With
// kTraditional the draw uses speech_min_len = noise_len, so every placement
// has speech_pos = 0 and speech_len = noise_len.
AugmentedSample augment_one(const AudioBuffer &x, const NoiseCatalog &catalog,
                            const PasConfig &cfg, MixMethod method,
                            std::uint64_t index);

// augment_one over a batch, fanned out across `jobs` threads.  The result is
// independent of `jobs`.
std::vector<AugmentedSample> augment_batch(std::span<const AudioBuffer> batch,
                                           const NoiseCatalog &catalog,
                                           const PasConfig &cfg,
                                           MixMethod method, int jobs = 1);
std::vector<AugmentedSample> augment_batch(
    std::span<const AudioBuffer> batch, std::span<const AudioBuffer> noise,
    const PasConfig &cfg, MixMethod method, int jobs = 1);

}  // namespace pas

#endif  // PAS_AUGMENT_H_
