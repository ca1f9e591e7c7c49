// include/pas/eval.h

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

#ifndef PAS_EVAL_H_
#define PAS_EVAL_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pas/audio.h"

namespace pas {

struct Trial {
  std::string enroll_id;
  std::string test_id;
  bool target = false;
};

struct ScoredTrial {
  Trial trial;
  double score = 0.0;
};

struct LabeledScore {
  bool target = false;
  double score = 0.0;
};

struct EerResult {
  double eer = 0.0;        // fraction in [0, 1]
  double threshold = 0.0;  // score at the equal-error operating point
};

// dot(a, b) / (|a| |b|).  DimensionMismatch, ZeroVector.
double cosine_score(std::span<const double> a, std::span<const double> b);

// Operating points are taken at every distinct score s (accept iff score >= s)
// plus one point above the maximum score.  There
//   FAR(s) = #{nontarget : score >= s} / #nontarget
//   FRR(s) = #{target : score < s} / #target
// FAR - FRR falls from +1 to -1 across the sweep; the EER is read off by
// linear interpolation between the two adjacent points where it changes sign.
// MissingClass unless both labels are present.
EerResult compute_eer(std::span<const LabeledScore> scores);
EerResult compute_eer(std::span<const ScoredTrial> scored);

// "label enroll test" per line, label in {1, 0}.
std::vector<Trial> read_trials(const std::filesystem::path &path);
// "label score" per line, label in {1, 0}.
std::vector<LabeledScore> read_scores(const std::filesystem::path &path);

// One line of the provenance sidecar shared by `augment` and
// `synth-testset`.  Absent placement fields serialize as null.
struct ProvenanceRecord {
  std::string input;
  std::string noise;  // empty: no noise applied
  std::string method;  // "pas", "traditional" or "none"
  bool mixed = false;
  std::size_t speech_len = 0;
  std::size_t speech_pos = 0;
  double snr_db = 0.0;
  double noise_gain = 0.0;
  std::size_t noise_offset = 0;
  std::size_t speech_offset = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::string output;  // file name inside the output directory
  std::string error;   // set only for skipped inputs

  std::string to_json_line() const;
  static ProvenanceRecord from_json_line(const std::string &line);
};

std::vector<ProvenanceRecord> read_provenance(const std::filesystem::path &path);

// Noisy copy of `clean` at exactly `snr_db` against a full-duration noise clip.
// Noise choice and offset come from SampleStream(seed, index); the clip is
// loop-padded when shorter than the utterance.
struct NoisyUtterance {
  AudioBuffer audio;
  std::size_t noise_id = 0;
  std::size_t noise_offset = 0;
  double noise_gain = 0.0;
};
NoisyUtterance synth_noisy(const AudioBuffer &clean,
                           std::span<const AudioBuffer> noise, double snr_db,
                           std::uint64_t seed, std::uint64_t index);

struct TestsetRequest {
  std::vector<std::filesystem::path> clean;
  std::vector<std::filesystem::path> noise;
  std::vector<double> snr_grid;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  int jobs = 1;
  int sample_rate = 16000;  // every input must already be at this rate
};

// Writes one WAV per (utterance, SNR) pair, named "<stem>.snr<value>.wav",
// plus "testset.jsonl".  Output index for utterance i and grid entry j is
// i * |grid| + j.  Outputs are staged and moved into out_dir only after every
// file has been written.  Errors: EmptyCatalog, InvalidConfig, IoError and the
// load_wav errors.
std::vector<ProvenanceRecord> synth_testset(const TestsetRequest &request);

}  // namespace pas

#endif  // PAS_EVAL_H_
