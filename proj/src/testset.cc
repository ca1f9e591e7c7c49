// src/testset.cc

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

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "pas/augment.h"
#include "pas/error.h"
#include "pas/eval.h"
#include "pas/parallel.h"
#include "pas/rng.h"
#include "pas/staging.h"
#include "pas/wav_io.h"

namespace fs = std::filesystem;

namespace pas {

std::string ProvenanceRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["noise"] = mixed ? nlohmann::ordered_json(noise) : nlohmann::ordered_json();
  j["method"] = method;
  if (mixed) {
    j["L_s"] = speech_len;
    j["P_s"] = speech_pos;
    j["snr_db"] = snr_db;
    j["noise_gain"] = noise_gain;
    j["noise_offset"] = noise_offset;
  } else {
    for (const char *key : {"L_s", "P_s", "snr_db", "noise_gain", "noise_offset"})
      j[key] = nullptr;
  }
  j["speech_offset"] = speech_offset;
  j["seed"] = seed;
  j["index"] = index;
  j["output"] = output;
  if (!error.empty()) j["error"] = error;
  return j.dump();
}

ProvenanceRecord ProvenanceRecord::from_json_line(const std::string &line) {
  ProvenanceRecord r;
  try {
    auto j = nlohmann::json::parse(line);
    r.input = j.at("input").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.mixed = !j.at("noise").is_null();
    if (r.mixed) {
      r.noise = j.at("noise").get<std::string>();
      r.speech_len = j.at("L_s").get<std::size_t>();
      r.speech_pos = j.at("P_s").get<std::size_t>();
      r.snr_db = j.at("snr_db").get<double>();
      r.noise_gain = j.at("noise_gain").get<double>();
      r.noise_offset = j.at("noise_offset").get<std::size_t>();
    }
    if (!j.at("speech_offset").is_null())
      r.speech_offset = j.at("speech_offset").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.index = j.at("index").get<std::uint64_t>();
    r.output = j.at("output").get<std::string>();
    if (j.contains("error")) r.error = j["error"].get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::kCorruptHeader, std::string("bad provenance record: ") + e.what());
  }
  return r;
}

std::vector<ProvenanceRecord> read_provenance(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kNotFound, path.string());
  std::vector<ProvenanceRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(ProvenanceRecord::from_json_line(line));
  return out;
}

NoisyUtterance synth_noisy(const AudioBuffer &clean, std::span<const AudioBuffer> noise,
                           double snr_db, std::uint64_t seed, std::uint64_t index) {
  if (noise.empty()) throw Error(Errc::kEmptyCatalog, "noise catalog is empty");
  if (clean.empty()) throw Error(Errc::kDegenerateSignal, "empty utterance");
  SampleStream stream(seed, index);
  const std::size_t id = stream.uniform_int(0, noise.size() - 1);
  const AudioBuffer padded = ensure_min_length(noise[id], clean.size());
  const std::size_t offset = stream.uniform_int(0, padded.size() - clean.size());
  const AudioBuffer clip = sample_segment(padded, clean.size(), offset);
  const double gain = mixing_gain(clean.samples(), clip.samples(), snr_db);
  return NoisyUtterance{apply_traditional(clean, clip, snr_db), id, offset, gain};
}

std::vector<ProvenanceRecord> synth_testset(const TestsetRequest &req) {
  if (req.clean.empty()) throw Error(Errc::kInvalidConfig, "clean manifest is empty");
  if (req.noise.empty()) throw Error(Errc::kEmptyCatalog, "noise catalog is empty");
  if (req.snr_grid.empty()) throw Error(Errc::kInvalidConfig, "snr grid is empty");
  std::set<std::string> grid_names;
  for (double snr : req.snr_grid) {
    if (!std::isfinite(snr)) throw Error(Errc::kInvalidConfig, "non-finite SNR in grid");
    if (!grid_names.insert(fmt::format("{}", snr)).second)
      throw Error(Errc::kInvalidConfig, fmt::format("duplicate SNR {} in grid", snr));
  }
  std::set<std::string> stems;
  for (const auto &p : req.clean)
    if (!stems.insert(p.stem().string()).second)
      throw Error(Errc::kInvalidConfig, "duplicate utterance stem '" +
                                            p.stem().string() + "'");

  std::vector<AudioBuffer> noise;
  noise.reserve(req.noise.size());
  for (const auto &p : req.noise) {
    noise.push_back(load_wav(p));
    if (noise.back().sample_rate() != req.sample_rate)
      throw Error(Errc::kUnsupportedFormat,
                  p.string() + " is not at " + std::to_string(req.sample_rate) + " Hz");
  }

  const std::size_t G = req.snr_grid.size();
  std::vector<ProvenanceRecord> records(req.clean.size() * G);
  StagedDirectory staged(req.out_dir);
  parallel_for(req.clean.size(), req.jobs, [&](std::size_t i) {
    const AudioBuffer clean = load_wav(req.clean[i]);
    if (clean.sample_rate() != req.sample_rate)
      throw Error(Errc::kUnsupportedFormat, req.clean[i].string() + " is not at " +
                                                std::to_string(req.sample_rate) + " Hz");
    for (std::size_t j = 0; j < G; ++j) {
      const std::uint64_t index = i * G + j;
      const double snr = req.snr_grid[j];
      NoisyUtterance noisy = synth_noisy(clean, noise, snr, req.seed, index);
      const std::string name =
          fmt::format("{}.snr{}.wav", req.clean[i].stem().string(), snr);
      save_wav(noisy.audio, staged.path_for(name));

      ProvenanceRecord &r = records[index];
      r.input = req.clean[i].string();
      r.noise = req.noise[noisy.noise_id].string();
      r.method = "traditional";
      r.mixed = true;
      r.speech_len = clean.size();
      r.speech_pos = 0;
      r.snr_db = snr;
      r.noise_gain = noisy.noise_gain;
      r.noise_offset = noisy.noise_offset;
      r.speech_offset = 0;
      r.seed = req.seed;
      r.index = index;
      r.output = name;
    }
  });

  std::ostringstream jsonl;
  for (const auto &r : records) jsonl << r.to_json_line() << '\n';
  {
    std::ofstream out(staged.path_for("testset.jsonl"), std::ios::binary);
    out << jsonl.str();
    if (!out) throw Error(Errc::kIoError, "cannot write testset.jsonl");
  }
  staged.commit();
  return records;
}

}  // namespace pas
