// include/pas/attention.h

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

#ifndef PAS_ATTENTION_H_
#define PAS_ATTENTION_H_

#include <span>
#include <vector>

#include "pas/matrix.h"

namespace pas {

// Reference (non-training) versions of the two attention blocks used in
// speaker-verification backbones: attentive statistics pooling over frames and
// squeeze-and-excitation channel gating.

// Nonnegative per-frame weights summing to 1 (within 1e-9).
class AttentionWeights {
 public:
  // WeightMismatch if any entry is negative or non-finite, or the sum is off.
  explicit AttentionWeights(std::vector<double> values);

  static AttentionWeights uniform(std::size_t frames);
  // Numerically stable softmax of arbitrary finite scores.
  static AttentionWeights softmax(std::span<const double> scores);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

// Per-dimension mean and population standard deviation of a T x D matrix,
// concatenated (length 2D).
std::vector<double> statistics_pooling(const Matrix &frames);

// mu_d = sum_t w_t h_td,  sigma_d = sqrt(max(sum_t w_t h_td^2 - mu_d^2, 0)).
// WeightMismatch if w.size() != T.
std::vector<double> attentive_statistics_pooling(const Matrix &frames,
                                                 const AttentionWeights &w);

// Global average of each channel map.
std::vector<double> se_squeeze(const std::vector<std::vector<double>> &channels);

// sigmoid(w2 * relu(w1 * s)) for squeezed statistics s.  w1 is (C/r) x C and
// w2 is C x (C/r).
std::vector<double> se_excitation(std::span<const double> squeezed,
                                  const Matrix &w1, const Matrix &w2);

// Scales channel c by its excitation gate.  ShapeMismatch when the weight
// shapes do not form a C -> C/r -> C bottleneck with r dividing C, or a
// channel map is empty.
std::vector<std::vector<double>> se_block(
    const std::vector<std::vector<double>> &channels, const Matrix &w1,
    const Matrix &w2);

}  // namespace pas

#endif  // PAS_ATTENTION_H_
