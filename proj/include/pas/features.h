// include/pas/features.h

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

#ifndef PAS_FEATURES_H_
#define PAS_FEATURES_H_

#include <cstddef>
#include <filesystem>

#include "pas/audio.h"
#include "pas/matrix.h"

namespace pas {

// Log-Mel front end.  Frames are not centered or padded: frame t covers
// samples [t * hop_length, t * hop_length + win_length), so a signal of n
// samples yields floor((n - win_length) / hop_length) + 1 frames.
struct MelConfig {
  std::size_t fft_size = 1024;
  std::size_t win_length = 400;
  std::size_t hop_length = 160;
  std::size_t n_mels = 80;
  int sample_rate = 16000;
  double fmin = 20.0;
  double fmax = 7600.0;
  double log_floor = 1e-10;

  // InvalidConfig naming the violated field.
  void validate() const;

  // 1024-point FFT, 25 ms Hamming window, 10 ms hop, 80 bands over
  // [20, 7600] Hz.  fmax is capped at the Nyquist rate.
  static MelConfig defaults(int sample_rate);

  std::size_t n_bins() const noexcept { return fft_size / 2 + 1; }
};

struct MelSpectrogram {
  Matrix data;  // n_frames x n_mels, natural-log energies
  MelConfig config;
};

std::size_t num_frames(std::size_t n_samples, std::size_t win_length,
                       std::size_t hop_length);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Periodic Hamming window, w[k] = 0.54 - 0.46 cos(2 pi k / length).
std::vector<double> hamming_window(std::size_t length);

// One-sided power spectrum per frame: n_frames x (fft_size / 2 + 1).
// TooShort if the buffer holds fewer than win_length samples.
Matrix stft_power(const AudioBuffer &buf, const MelConfig &cfg);

// Triangular HTK-scale filters, n_mels x (fft_size / 2 + 1).
Matrix mel_filterbank(const MelConfig &cfg);

// Filter center frequencies in Hz, ascending.
std::vector<double> mel_center_frequencies(const MelConfig &cfg);

// ln(max(filterbank * power, log_floor)) per frame.
MelSpectrogram log_mel(const AudioBuffer &buf, const MelConfig &cfg);

// "LMEL" container: 16-byte header {magic "LMEL", u32 rows, u32 cols,
// u32 reserved = 0} followed by rows * cols little-endian float32 values,
// row-major.
void write_lmel(const Matrix &m, const std::filesystem::path &path);
Matrix read_lmel(const std::filesystem::path &path);

}  // namespace pas

#endif  // PAS_FEATURES_H_
