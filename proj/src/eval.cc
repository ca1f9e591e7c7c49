// src/eval.cc

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

#include "pas/eval.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pas/error.h"

namespace pas {

namespace {

bool parse_label(const std::string &token, const std::string &where) {
  if (token == "1" || token == "target") return true;
  if (token == "0" || token == "nontarget") return false;
  throw Error(Errc::kInvalidConfig, where + ": label must be 1 or 0, got '" + token + "'");
}

std::ifstream open_text(const std::filesystem::path &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(Errc::kNotFound, path.string());
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  return in;
}

bool blank_or_comment(const std::string &line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

double cosine_score(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(Errc::kDimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw Error(Errc::kZeroVector, "zero-norm embedding");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

EerResult compute_eer(std::span<const LabeledScore> scores) {
  std::vector<LabeledScore> sorted(scores.begin(), scores.end());
  std::size_t n_target = 0;
  for (const auto &s : sorted) {
    if (!std::isfinite(s.score))
      throw Error(Errc::kInvalidConfig, "non-finite score");
    n_target += s.target;
  }
  const std::size_t n_nontarget = sorted.size() - n_target;
  if (n_target == 0 || n_nontarget == 0)
    throw Error(Errc::kMissingClass,
                n_target == 0 ? "no target trials" : "no nontarget trials");
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledScore &a, const LabeledScore &b) { return a.score < b.score; });

  // Walk thresholds upward.  Before the first group every trial is accepted:
  // FAR = 1, FRR = 0.  Crossing a tie group moves all of it to "rejected".
  const double T = static_cast<double>(n_target);
  const double N = static_cast<double>(n_nontarget);
  std::size_t targets_below = 0, nontargets_below = 0;
  double prev_far = 1.0, prev_frr = 0.0, prev_thr = sorted.front().score;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double thr = sorted[i].score;
    // Operating point at threshold thr: everything below thr is rejected.
    const double far = (N - static_cast<double>(nontargets_below)) / N;
    const double frr = static_cast<double>(targets_below) / T;
    if (far - frr <= 0.0) {
      if (far == frr) return {far, thr};
      const double d0 = prev_far - prev_frr, d1 = far - frr;
      const double t = d0 / (d0 - d1);
      return {prev_far + t * (far - prev_far), prev_thr + t * (thr - prev_thr)};
    }
    prev_far = far;
    prev_frr = frr;
    prev_thr = thr;
    for (; i < sorted.size() && sorted[i].score == thr; ++i)
      (sorted[i].target ? targets_below : nontargets_below) += 1;
  }
  // Point above the maximum score: FAR = 0, FRR = 1.
  const double d0 = prev_far - prev_frr;
  const double t = d0 / (d0 + 1.0);
  return {prev_far - t * prev_far, prev_thr};
}

EerResult compute_eer(std::span<const ScoredTrial> scored) {
  std::vector<LabeledScore> flat;
  flat.reserve(scored.size());
  for (const auto &s : scored) flat.push_back({s.trial.target, s.score});
  return compute_eer(flat);
}

std::vector<Trial> read_trials(const std::filesystem::path &path) {
  auto in = open_text(path);
  std::vector<Trial> trials;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string label, enroll, test, extra;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (!(fields >> label >> enroll >> test) || (fields >> extra))
      throw Error(Errc::kInvalidConfig, where + ": expected 'label enroll test'");
    trials.push_back({enroll, test, parse_label(label, where)});
  }
  return trials;
}

std::vector<LabeledScore> read_scores(const std::filesystem::path &path) {
  auto in = open_text(path);
  std::vector<LabeledScore> scores;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string label, score_text, extra;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (!(fields >> label >> score_text) || (fields >> extra))
      throw Error(Errc::kInvalidConfig, where + ": expected 'label score'");
    double score = 0.0;
    try {
      std::size_t used = 0;
      score = std::stod(score_text, &used);
      if (used != score_text.size()) throw std::invalid_argument(score_text);
    } catch (const std::exception &) {
      throw Error(Errc::kInvalidConfig, where + ": bad score '" + score_text + "'");
    }
    if (!std::isfinite(score))
      throw Error(Errc::kInvalidConfig, where + ": non-finite score");
    scores.push_back({parse_label(label, where), score});
  }
  return scores;
}

}  // namespace pas
