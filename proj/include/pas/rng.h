// include/pas/rng.h

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

#ifndef PAS_RNG_H_
#define PAS_RNG_H_

#include <cstdint>

namespace pas {

// Counter-based random stream keyed by (master_seed, index).  Stream k is a
// pure function of its key, so work item k draws the same values regardless
// of which thread runs it or in which order items are visited.
//
// Distribution helpers are implemented here rather than through <random>
// distributions, whose output is implementation-defined.
class SampleStream {
 public:
  SampleStream(std::uint64_t master_seed, std::uint64_t index) noexcept;

  std::uint64_t next_u64() noexcept;

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() noexcept;

  // Uniform integer on the closed range [lo, hi]; lo <= hi.  Always consumes
  // at least one draw, including the single-point case.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;

  // Uniform real on [lo, hi]; returns lo when lo == hi.
  double uniform_real(double lo, double hi) noexcept;

  bool bernoulli(double p) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace pas

#endif  // PAS_RNG_H_
