// src/rng.cc

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

#include "pas/rng.h"

#include <algorithm>

namespace pas {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SampleStream::SampleStream(std::uint64_t master_seed,
                           std::uint64_t index) noexcept
    : key_(splitmix64(splitmix64(master_seed) ^ splitmix64(~index))) {}

std::uint64_t SampleStream::next_u64() noexcept {
  ++counter_;
  return splitmix64(key_ + counter_ * kGolden);
}

double SampleStream::uniform01() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t SampleStream::uniform_int(std::uint64_t lo,
                                        std::uint64_t hi) noexcept {
  const std::uint64_t range = hi - lo + 1;
  if (range == 0) return next_u64();  // full 64-bit range
  // Lemire's nearly-divisionless bounded draw.
  unsigned __int128 m =
      static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(range);
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) *
          static_cast<unsigned __int128>(range);
      low = static_cast<std::uint64_t>(m);
    }
  }
  return lo + static_cast<std::uint64_t>(m >> 64);
}

double SampleStream::uniform_real(double lo, double hi) noexcept {
  const double u = uniform01();
  if (lo == hi) return lo;
  return std::min(hi, lo + (hi - lo) * u);
}

bool SampleStream::bernoulli(double p) noexcept { return uniform01() < p; }

}  // namespace pas
