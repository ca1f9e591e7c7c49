// tests/support/fixtures.cc

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

#include "support/fixtures.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <numbers>

#include "pas/wav_io.h"

namespace fs = std::filesystem;

namespace pas::testing {

TempDir::TempDir() {
  std::string templ = (fs::temp_directory_path() / "pas-test-XXXXXX").string();
  char *made = ::mkdtemp(templ.data());
  if (made == nullptr) throw std::runtime_error("mkdtemp failed");
  path_ = made;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::vector<double> gaussian_noise(std::mt19937_64 &rng, std::size_t n, double sigma) {
  std::normal_distribution<double> dist(0.0, sigma);
  std::vector<double> out(n);
  for (auto &v : out) v = std::clamp(dist(rng), -0.99, 0.99);
  return out;
}

std::vector<double> sine(double freq_hz, int sample_rate, std::size_t n, double amplitude,
                         double phase) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = amplitude * std::sin(2 * std::numbers::pi * freq_hz * i / sample_rate + phase);
  return out;
}

std::vector<double> speechlike(std::mt19937_64 &rng, std::size_t n, int sample_rate) {
  std::uniform_real_distribution<double> f0(90.0, 250.0);
  std::uniform_real_distribution<double> rate(2.0, 6.0);
  const double base = f0(rng), syll = rate(rng);
  auto out = gaussian_noise(rng, n, 0.005);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double env = 0.5 + 0.5 * std::sin(2 * std::numbers::pi * syll * t);
    double v = 0;
    for (int h = 1; h <= 4; ++h) v += std::sin(2 * std::numbers::pi * base * h * t) / h;
    out[i] = std::clamp(out[i] + 0.2 * env * v, -0.99, 0.99);
  }
  return out;
}

fs::path write_corpus(const fs::path &dir, const std::string &prefix, std::size_t count,
                      std::size_t min_len, std::size_t max_len, std::uint64_t seed,
                      bool noise_like, int sample_rate) {
  fs::create_directories(dir);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  const fs::path manifest = dir / (prefix + "list.txt");
  std::ofstream list(manifest);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = len(rng);
    auto samples = noise_like ? gaussian_noise(rng, n, 0.1) : speechlike(rng, n, sample_rate);
    const fs::path p = dir / (prefix + std::to_string(i) + ".wav");
    save_wav(AudioBuffer(std::move(samples), sample_rate), p);
    list << p.string() << '\n';
  }
  return manifest;
}

std::vector<std::uint8_t> read_bytes(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace pas::testing
