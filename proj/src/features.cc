// src/features.cc

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

#include "pas/features.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "pas/error.h"

namespace pas {

namespace {

struct FftwFree {
  void operator()(void *p) const noexcept { fftw_free(p); }
};

template <typename T>
using FftwArray = std::unique_ptr<T[], FftwFree>;

struct PlanDeleter {
  void operator()(fftw_plan_s *p) const noexcept { fftw_destroy_plan(p); }
};

// FFTW's planner is not thread-safe; execution with the new-array interface
// is.  Plans are built once per size under a lock and reused.
fftw_plan r2c_plan(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<fftw_plan_s, PlanDeleter>> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = plans[n];
  if (!slot) {
    FftwArray<double> in(fftw_alloc_real(n));
    FftwArray<fftw_complex> out(fftw_alloc_complex(n / 2 + 1));
    slot.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                    FFTW_ESTIMATE));
  }
  return slot.get();
}

void put_u32(std::ofstream &out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char *>(b), 4);
}

std::uint32_t get_u32(const unsigned char *b) {
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void MelConfig::validate() const {
  if (fft_size < 2) throw Error(Errc::kInvalidConfig, "fft_size must be >= 2");
  if (win_length < 1 || win_length > fft_size)
    throw Error(Errc::kInvalidConfig, "win_length must lie in [1, fft_size]");
  if (hop_length < 1) throw Error(Errc::kInvalidConfig, "hop_length must be >= 1");
  if (n_mels < 1) throw Error(Errc::kInvalidConfig, "n_mels must be >= 1");
  if (sample_rate <= 0)
    throw Error(Errc::kInvalidConfig, "sample_rate must be positive");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0))
    throw Error(Errc::kInvalidConfig,
                "fmin/fmax must satisfy 0 <= fmin < fmax <= sample_rate / 2");
  if (!(log_floor > 0.0)) throw Error(Errc::kInvalidConfig, "log_floor must be > 0");
}

MelConfig MelConfig::defaults(int sample_rate) {
  MelConfig cfg;
  cfg.sample_rate = sample_rate;
  cfg.win_length = seconds_to_samples(0.025, sample_rate);
  cfg.hop_length = seconds_to_samples(0.010, sample_rate);
  cfg.fmax = std::min(7600.0, sample_rate / 2.0);
  return cfg;
}

std::size_t num_frames(std::size_t n_samples, std::size_t win_length,
                       std::size_t hop_length) {
  if (n_samples < win_length) return 0;
  return (n_samples - win_length) / hop_length + 1;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<double> hamming_window(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t k = 0; k < length; ++k)
    w[k] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                  static_cast<double>(length));
  return w;
}

Matrix stft_power(const AudioBuffer &buf, const MelConfig &cfg) {
  cfg.validate();
  if (buf.size() < cfg.win_length)
    throw Error(Errc::kTooShort, std::to_string(buf.size()) +
                                     " samples is shorter than one window (" +
                                     std::to_string(cfg.win_length) + ")");
  const std::size_t frames = num_frames(buf.size(), cfg.win_length, cfg.hop_length);
  const std::size_t bins = cfg.n_bins();
  const auto window = hamming_window(cfg.win_length);
  fftw_plan plan = r2c_plan(cfg.fft_size);

  FftwArray<double> in(fftw_alloc_real(cfg.fft_size));
  FftwArray<fftw_complex> spec(fftw_alloc_complex(bins));
  Matrix power(frames, bins);
  auto x = buf.samples();
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t start = t * cfg.hop_length;
    for (std::size_t k = 0; k < cfg.win_length; ++k)
      in[k] = x[start + k] * window[k];
    std::fill(in.get() + cfg.win_length, in.get() + cfg.fft_size, 0.0);
    fftw_execute_dft_r2c(plan, in.get(), spec.get());
    auto row = power.row(t);
    for (std::size_t b = 0; b < bins; ++b)
      row[b] = spec[b][0] * spec[b][0] + spec[b][1] * spec[b][1];
  }
  return power;
}

std::vector<double> mel_center_frequencies(const MelConfig &cfg) {
  const double lo = hz_to_mel(cfg.fmin);
  const double hi = hz_to_mel(cfg.fmax);
  const double step = (hi - lo) / static_cast<double>(cfg.n_mels + 1);
  std::vector<double> centers(cfg.n_mels);
  for (std::size_t m = 0; m < cfg.n_mels; ++m)
    centers[m] = mel_to_hz(lo + step * static_cast<double>(m + 1));
  return centers;
}

Matrix mel_filterbank(const MelConfig &cfg) {
  cfg.validate();
  const double lo = hz_to_mel(cfg.fmin);
  const double hi = hz_to_mel(cfg.fmax);
  const double step = (hi - lo) / static_cast<double>(cfg.n_mels + 1);
  std::vector<double> edges(cfg.n_mels + 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i] = mel_to_hz(lo + step * static_cast<double>(i));

  const double bin_hz = static_cast<double>(cfg.sample_rate) / cfg.fft_size;
  Matrix fb(cfg.n_mels, cfg.n_bins());
  for (std::size_t m = 0; m < cfg.n_mels; ++m) {
    const double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (std::size_t b = 0; b < cfg.n_bins(); ++b) {
      const double f = bin_hz * static_cast<double>(b);
      const double rise = (f - left) / (center - left);
      const double fall = (right - f) / (right - center);
      fb(m, b) = std::max(0.0, std::min(rise, fall));
    }
  }
  return fb;
}

MelSpectrogram log_mel(const AudioBuffer &buf, const MelConfig &cfg) {
  const Matrix power = stft_power(buf, cfg);
  const Matrix fb = mel_filterbank(cfg);
  Matrix out(power.rows(), cfg.n_mels);
  for (std::size_t t = 0; t < power.rows(); ++t) {
    auto p = power.row(t);
    for (std::size_t m = 0; m < cfg.n_mels; ++m) {
      auto w = fb.row(m);
      double e = 0.0;
      for (std::size_t b = 0; b < w.size(); ++b) e += w[b] * p[b];
      out(t, m) = std::log(std::max(e, cfg.log_floor));
    }
  }
  return MelSpectrogram{std::move(out), cfg};
}

void write_lmel(const Matrix &m, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIoError, "cannot open " + path.string());
  out.write("LMEL", 4);
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.cols()));
  put_u32(out, 0);
  for (double v : m.data()) {
    const float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    put_u32(out, bits);
  }
  if (!out) throw Error(Errc::kIoError, "write failed: " + path.string());
}

Matrix read_lmel(const std::filesystem::path &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(Errc::kNotFound, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char *>(header), 16) ||
      std::memcmp(header, "LMEL", 4) != 0)
    throw Error(Errc::kCorruptHeader, path.string() + ": missing LMEL header");
  const std::uint32_t rows = get_u32(header + 4);
  const std::uint32_t cols = get_u32(header + 8);
  Matrix m(rows, cols);
  std::vector<unsigned char> body(static_cast<std::size_t>(rows) * cols * 4);
  if (!in.read(reinterpret_cast<char *>(body.data()),
               static_cast<std::streamsize>(body.size())))
    throw Error(Errc::kCorruptHeader, path.string() + ": truncated matrix body");
  auto data = m.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::uint32_t bits = get_u32(body.data() + 4 * i);
    float f;
    std::memcpy(&f, &bits, sizeof f);
    data[i] = f;
  }
  return m;
}

}  // namespace pas
