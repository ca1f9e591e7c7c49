// src/attention.cc

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

#include "pas/attention.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pas/error.h"

namespace pas {

namespace {

void check_frames(const Matrix &frames) {
  if (frames.rows() < 1 || frames.cols() < 1)
    throw Error(Errc::kShapeMismatch, "frame matrix must be at least 1 x 1");
}

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

AttentionWeights::AttentionWeights(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw Error(Errc::kWeightMismatch, "attention weights are empty");
  double sum = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0)
      throw Error(Errc::kWeightMismatch, "attention weights must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(Errc::kWeightMismatch,
                "attention weights sum to " + std::to_string(sum));
}

AttentionWeights AttentionWeights::uniform(std::size_t frames) {
  return AttentionWeights(
      std::vector<double>(frames, 1.0 / static_cast<double>(frames)));
}

AttentionWeights AttentionWeights::softmax(std::span<const double> scores) {
  if (scores.empty())
    throw Error(Errc::kWeightMismatch, "softmax of an empty score vector");
  const double peak = *std::max_element(scores.begin(), scores.end());
  std::vector<double> w(scores.size());
  double sum = 0.0;
  for (std::size_t t = 0; t < w.size(); ++t) sum += w[t] = std::exp(scores[t] - peak);
  for (double &v : w) v /= sum;
  return AttentionWeights(std::move(w));
}

std::vector<double> statistics_pooling(const Matrix &frames) {
  check_frames(frames);
  const std::size_t T = frames.rows(), D = frames.cols();
  std::vector<double> out(2 * D, 0.0);
  for (std::size_t d = 0; d < D; ++d) {
    double mean = 0.0;
    for (std::size_t t = 0; t < T; ++t) mean += frames(t, d);
    mean /= static_cast<double>(T);
    double var = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const double dev = frames(t, d) - mean;
      var += dev * dev;
    }
    out[d] = mean;
    out[D + d] = std::sqrt(var / static_cast<double>(T));
  }
  return out;
}

std::vector<double> attentive_statistics_pooling(const Matrix &frames,
                                                 const AttentionWeights &w) {
  check_frames(frames);
  if (w.size() != frames.rows())
    throw Error(Errc::kWeightMismatch,
                std::to_string(w.size()) + " weights for " +
                    std::to_string(frames.rows()) + " frames");
  const std::size_t T = frames.rows(), D = frames.cols();
  auto weights = w.values();
  std::vector<double> out(2 * D, 0.0);
  for (std::size_t d = 0; d < D; ++d) {
    double mu = 0.0, second = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const double h = frames(t, d);
      mu += weights[t] * h;
      second += weights[t] * h * h;
    }
    out[d] = mu;
    out[D + d] = std::sqrt(std::max(second - mu * mu, 0.0));
  }
  return out;
}

std::vector<double> se_squeeze(const std::vector<std::vector<double>> &channels) {
  std::vector<double> s(channels.size());
  for (std::size_t c = 0; c < channels.size(); ++c) {
    if (channels[c].empty())
      throw Error(Errc::kShapeMismatch, "channel " + std::to_string(c) + " is empty");
    double acc = 0.0;
    for (double v : channels[c]) acc += v;
    s[c] = acc / static_cast<double>(channels[c].size());
  }
  return s;
}

std::vector<double> se_excitation(std::span<const double> squeezed,
                                  const Matrix &w1, const Matrix &w2) {
  const std::size_t C = squeezed.size();
  const std::size_t hidden = w1.rows();
  if (C == 0 || hidden == 0 || w1.cols() != C || w2.rows() != C ||
      w2.cols() != hidden || C % hidden != 0)
    throw Error(Errc::kShapeMismatch,
                "expected w1 (C/r x C) and w2 (C x C/r) with r dividing C = " +
                    std::to_string(C));
  std::vector<double> z(hidden);
  for (std::size_t j = 0; j < hidden; ++j) {
    double acc = 0.0;
    for (std::size_t c = 0; c < C; ++c) acc += w1(j, c) * squeezed[c];
    z[j] = std::max(acc, 0.0);
  }
  std::vector<double> gate(C);
  for (std::size_t c = 0; c < C; ++c) {
    double acc = 0.0;
    for (std::size_t j = 0; j < hidden; ++j) acc += w2(c, j) * z[j];
    gate[c] = sigmoid(acc);
  }
  return gate;
}

std::vector<std::vector<double>> se_block(
    const std::vector<std::vector<double>> &channels, const Matrix &w1,
    const Matrix &w2) {
  const auto gate = se_excitation(se_squeeze(channels), w1, w2);
  std::vector<std::vector<double>> out(channels.size());
  for (std::size_t c = 0; c < channels.size(); ++c) {
    out[c].resize(channels[c].size());
    for (std::size_t i = 0; i < channels[c].size(); ++i)
      out[c][i] = gate[c] * channels[c][i];
  }
  return out;
}

}  // namespace pas
