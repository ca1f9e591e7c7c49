// tests/support/fixtures.h

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

#ifndef PAS_TESTS_FIXTURES_H_
#define PAS_TESTS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "pas/audio.h"

namespace pas::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Gaussian samples with standard deviation `sigma`, clipped to +-0.99.
std::vector<double> gaussian_noise(std::mt19937_64 &rng, std::size_t n, double sigma);

std::vector<double> sine(double freq_hz, int sample_rate, std::size_t n,
                         double amplitude = 0.5, double phase = 0.0);

// Speech-like test signal: a few amplitude-modulated harmonics plus a small
// noise floor.
std::vector<double> speechlike(std::mt19937_64 &rng, std::size_t n, int sample_rate);

// Writes `count` WAVs named <prefix><i>.wav with lengths drawn from
// [min_len, max_len], and a manifest listing them.  Returns the manifest path.
std::filesystem::path write_corpus(const std::filesystem::path &dir,
                                   const std::string &prefix, std::size_t count,
                                   std::size_t min_len, std::size_t max_len,
                                   std::uint64_t seed, bool noise_like,
                                   int sample_rate = 16000);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path &path);

}  // namespace pas::testing

#endif  // PAS_TESTS_FIXTURES_H_
