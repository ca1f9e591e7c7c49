// src/augment.cc

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

#include "pas/augment.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pas/error.h"
#include "pas/parallel.h"

namespace pas {

namespace {

void require_same_rate(const AudioBuffer &x, const AudioBuffer &n) {
  if (x.sample_rate() != n.sample_rate())
    throw Error(Errc::kUnsupportedFormat,
                "speech at " + std::to_string(x.sample_rate()) +
                    " Hz but noise at " + std::to_string(n.sample_rate()) +
                    " Hz; resampling is not performed");
}

void check_placement(const PasConfig &cfg, const PasPlacement &p) {
  if (p.speech_len < cfg.speech_min_len || p.speech_len > cfg.noise_len)
    throw Error(Errc::kOutOfRange,
                "speech_len " + std::to_string(p.speech_len) + " outside [" +
                    std::to_string(cfg.speech_min_len) + ", " +
                    std::to_string(cfg.noise_len) + "]");
  if (p.speech_pos > cfg.noise_len - p.speech_len)
    throw Error(Errc::kOutOfRange,
                "speech_pos " + std::to_string(p.speech_pos) + " exceeds " +
                    std::to_string(cfg.noise_len - p.speech_len));
  if (!(p.snr_db >= cfg.snr_min && p.snr_db <= cfg.snr_max))
    throw Error(Errc::kOutOfRange, "snr " + std::to_string(p.snr_db) +
                                       " dB outside configured range");
}

}  // namespace

void PasConfig::validate() const {
  if (noise_len < 1)
    throw Error(Errc::kInvalidConfig, "noise_len must be >= 1");
  if (speech_min_len < 1 || speech_min_len > noise_len)
    throw Error(Errc::kInvalidConfig,
                "speech_min_len must satisfy 1 <= speech_min_len <= noise_len (" +
                    std::to_string(speech_min_len) + " vs " +
                    std::to_string(noise_len) + ")");
  if (!std::isfinite(snr_min))
    throw Error(Errc::kInvalidConfig, "snr_min must be finite");
  if (!std::isfinite(snr_max))
    throw Error(Errc::kInvalidConfig, "snr_max must be finite");
  if (snr_min > snr_max)
    throw Error(Errc::kInvalidConfig, "snr_min must not exceed snr_max");
  if (!(mix_probability >= 0.0 && mix_probability <= 1.0))
    throw Error(Errc::kInvalidConfig, "mix_probability must lie in [0, 1]");
}

PasConfig PasConfig::defaults(int sample_rate) {
  PasConfig cfg;
  cfg.noise_len = seconds_to_samples(3.2, sample_rate);
  cfg.speech_min_len = seconds_to_samples(1.0, sample_rate);
  cfg.snr_min = 0.0;
  cfg.snr_max = 20.0;
  cfg.mix_probability = 0.75;
  return cfg;
}

std::string_view method_name(MixMethod method) {
  return method == MixMethod::kPartial ? "pas" : "traditional";
}

MixMethod parse_method(std::string_view name) {
  if (name == "pas" || name == "partial") return MixMethod::kPartial;
  if (name == "traditional" || name == "tan") return MixMethod::kTraditional;
  throw Error(Errc::kInvalidConfig,
              "method must be 'pas' or 'traditional', got '" +
                  std::string(name) + "'");
}

double signal_power(std::span<const double> samples) {
  if (samples.empty())
    throw Error(Errc::kDegenerateSignal, "power of an empty signal");
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  const double power = acc / static_cast<double>(samples.size());
  if (power == 0.0) throw Error(Errc::kDegenerateSignal, "signal has zero power");
  return power;
}

double snr_gain(double speech_power, double noise_power, double snr_db) {
  if (!(speech_power > 0.0) || !std::isfinite(speech_power))
    throw Error(Errc::kDegenerateSignal, "speech power must be positive");
  if (!(noise_power > 0.0) || !std::isfinite(noise_power))
    throw Error(Errc::kDegenerateSignal, "noise power must be positive");
  return std::sqrt(speech_power / (noise_power * std::pow(10.0, snr_db / 10.0)));
}

double mixing_gain(std::span<const double> speech,
                   std::span<const double> noise_overlap, double snr_db) {
  return snr_gain(signal_power(speech), signal_power(noise_overlap), snr_db);
}

AudioBuffer apply_traditional(const AudioBuffer &x, const AudioBuffer &n,
                              double snr_db) {
  require_same_rate(x, n);
  if (x.empty()) throw Error(Errc::kDegenerateSignal, "empty speech");
  if (n.size() < x.size())
    throw Error(Errc::kOutOfRange,
                "noise (" + std::to_string(n.size()) +
                    " samples) shorter than speech (" +
                    std::to_string(x.size()) + "); loop-pad it first");
  auto speech = x.samples();
  auto noise = n.samples().first(speech.size());
  const double g = mixing_gain(speech, noise, snr_db);
  std::vector<double> out(speech.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = speech[i] + g * noise[i];
  return AudioBuffer(std::move(out), x.sample_rate());
}

AugmentedSample apply_pas(const AudioBuffer &x, const AudioBuffer &n,
                          const PasConfig &cfg, const PasPlacement &draws) {
  cfg.validate();
  check_placement(cfg, draws);
  require_same_rate(x, n);
  auto noise = view_segment(n.samples(), {draws.noise_offset, cfg.noise_len});
  auto speech =
      view_segment(x.samples(), {draws.speech_offset, draws.speech_len});
  const std::size_t pos = draws.speech_pos;
  const std::size_t len = draws.speech_len;
  const double g = mixing_gain(speech, noise.subspan(pos, len), draws.snr_db);

  std::vector<double> out(cfg.noise_len);
  for (std::size_t i = 0; i < pos; ++i) out[i] = g * noise[i];
  for (std::size_t j = 0; j < len; ++j)
    out[pos + j] = speech[j] + g * noise[pos + j];
  for (std::size_t i = pos + len; i < out.size(); ++i) out[i] = g * noise[i];

  PasPlacement applied = draws;
  applied.noise_gain = g;
  return AugmentedSample{AudioBuffer(std::move(out), x.sample_rate()), applied,
                         draws.speech_offset};
}

NoiseCatalog::NoiseCatalog(std::vector<AudioBuffer> clips, std::size_t min_len)
    : min_len_(min_len) {
  if (clips.empty()) throw Error(Errc::kEmptyCatalog, "noise catalog is empty");
  clips_.reserve(clips.size());
  for (auto &clip : clips) {
    if (clip.size() < min_len)
      clips_.push_back(loop_pad(clip, min_len));
    else
      clips_.push_back(std::move(clip));
    lengths_.push_back(clips_.back().size());
  }
}

bool draw_mix_decision(const PasConfig &cfg, SampleStream &stream) {
  return stream.bernoulli(cfg.mix_probability);
}

PasPlacement draw_placement(const PasConfig &cfg, SampleStream &stream,
                            std::span<const std::size_t> noise_lengths,
                            std::size_t speech_available) {
  if (noise_lengths.empty())
    throw Error(Errc::kEmptyCatalog, "noise catalog is empty");
  PasPlacement p;
  p.noise_id = stream.uniform_int(0, noise_lengths.size() - 1);
  p.noise_offset = stream.uniform_int(0, noise_lengths[p.noise_id] - cfg.noise_len);
  p.speech_len = stream.uniform_int(cfg.speech_min_len, cfg.noise_len);
  const std::size_t avail = std::max(speech_available, p.speech_len);
  p.speech_offset = stream.uniform_int(0, avail - p.speech_len);
  p.snr_db = stream.uniform_real(cfg.snr_min, cfg.snr_max);
  p.speech_pos = stream.uniform_int(0, cfg.noise_len - p.speech_len);
  return p;
}

AugmentedSample augment_one(const AudioBuffer &x, const NoiseCatalog &catalog,
                            const PasConfig &cfg, MixMethod method,
                            std::uint64_t index) {
  if (catalog.min_len() < cfg.noise_len)
    throw Error(Errc::kInvalidConfig,
                "noise catalog padded to " + std::to_string(catalog.min_len()) +
                    " samples, need " + std::to_string(cfg.noise_len));
  if (x.empty()) throw Error(Errc::kDegenerateSignal, "empty speech");

  std::optional<AudioBuffer> padded;
  if (x.size() < cfg.noise_len) padded = loop_pad(x, cfg.noise_len);
  const AudioBuffer &speech = padded ? *padded : x;

  SampleStream stream(cfg.master_seed, index);
  if (!draw_mix_decision(cfg, stream)) {
    const std::size_t offset =
        stream.uniform_int(0, speech.size() - cfg.noise_len);
    return AugmentedSample{sample_segment(speech, cfg.noise_len, offset),
                           std::nullopt, offset};
  }

  PasConfig effective = cfg;
  if (method == MixMethod::kTraditional) effective.speech_min_len = cfg.noise_len;
  PasPlacement draws =
      draw_placement(effective, stream, catalog.lengths(), speech.size());
  return apply_pas(speech, catalog[draws.noise_id], effective, draws);
}

std::vector<AugmentedSample> augment_batch(std::span<const AudioBuffer> batch,
                                           const NoiseCatalog &catalog,
                                           const PasConfig &cfg,
                                           MixMethod method, int jobs) {
  cfg.validate();
  std::vector<std::optional<AugmentedSample>> slots(batch.size());
  parallel_for(batch.size(), jobs, [&](std::size_t i) {
    slots[i] = augment_one(batch[i], catalog, cfg, method, i);
  });
  std::vector<AugmentedSample> out;
  out.reserve(slots.size());
  for (auto &s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<AugmentedSample> augment_batch(std::span<const AudioBuffer> batch,
                                           std::span<const AudioBuffer> noise,
                                           const PasConfig &cfg,
                                           MixMethod method, int jobs) {
  cfg.validate();
  NoiseCatalog catalog(std::vector<AudioBuffer>(noise.begin(), noise.end()),
                       cfg.noise_len);
  return augment_batch(batch, catalog, cfg, method, jobs);
}

}  // namespace pas
