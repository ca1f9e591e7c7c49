// src/cli/cli.cc

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

#include "pas/cli.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "pas/augment.h"
#include "pas/error.h"
#include "pas/eval.h"
#include "pas/features.h"
#include "pas/manifest.h"
#include "pas/parallel.h"
#include "pas/pca.h"
#include "pas/staging.h"
#include "pas/wav_io.h"

namespace fs = std::filesystem;

namespace pas::cli {

namespace {

struct AugmentOptions {
  fs::path manifest;
  fs::path noise_manifest;
  fs::path noise_dir;
  fs::path out_dir;
  std::string method = "pas";
  double ln_sec = 3.2;
  double ls_min_sec = 1.0;
  std::string snr = "0:20";
  double mix_prob = 0.75;
  std::uint64_t seed = 0;
  int jobs = 1;
  int sample_rate = 16000;
  bool skip_errors = false;
};

struct TestsetOptions {
  fs::path clean;
  fs::path noise_manifest;
  fs::path noise_dir;
  fs::path out_dir;
  std::vector<double> snr_grid = {0, 5, 10, 15, 20};
  std::uint64_t seed = 0;
  int jobs = 1;
  int sample_rate = 16000;
};

struct FeatureOptions {
  fs::path manifest;
  fs::path out_dir;
  std::size_t fft_size = 1024;
  double win_ms = 25.0;
  double hop_ms = 10.0;
  std::size_t n_mels = 80;
  double fmin = 20.0;
  double fmax = 7600.0;
  double log_floor = 1e-10;
  int jobs = 1;
  int sample_rate = 16000;
  bool skip_errors = false;
};

struct EerOptions {
  fs::path scores;
};

struct PcaOptions {
  fs::path embeddings;
  fs::path labels;
  std::size_t k = 2;
  fs::path out;
};

std::pair<double, double> parse_snr_range(const std::string &text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const double v = std::stod(text);
      return {v, v};
    }
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception &) {
    throw Error(Errc::kInvalidConfig, "--snr must be MIN:MAX in dB, got '" + text + "'");
  }
}

void require_jobs(int jobs) {
  if (jobs < 1) throw Error(Errc::kInvalidConfig, "--jobs must be >= 1");
}

std::vector<fs::path> noise_sources(const fs::path &manifest, const fs::path &dir) {
  if (!manifest.empty() && !dir.empty())
    throw Error(Errc::kInvalidConfig, "give either --noise or --noise-dir, not both");
  if (manifest.empty() && dir.empty())
    throw Error(Errc::kInvalidConfig, "one of --noise or --noise-dir is required");
  auto paths = manifest.empty() ? list_wav_files(dir) : read_manifest(manifest);
  if (paths.empty()) throw Error(Errc::kEmptyCatalog, "noise catalog is empty");
  return paths;
}

void require_unique_names(const std::vector<std::string> &names) {
  std::set<std::string> seen;
  for (const auto &n : names)
    if (!seen.insert(n).second)
      throw Error(Errc::kInvalidConfig,
                  "two inputs map to the same output name '" + n + "'");
}

AudioBuffer load_at_rate(const fs::path &path, int sample_rate) {
  AudioBuffer buf = load_wav(path);
  if (buf.sample_rate() != sample_rate)
    throw Error(Errc::kUnsupportedFormat,
                fmt::format("{} is at {} Hz, expected {} Hz (resampling is not supported)",
                            path.string(), buf.sample_rate(), sample_rate));
  return buf;
}

std::size_t ms_to_samples(double ms, int sample_rate, const char *flag) {
  try {
    return seconds_to_samples(ms / 1000.0, sample_rate);
  } catch (const Error &) {
    throw Error(Errc::kInvalidConfig,
                fmt::format("{} = {} ms is not a whole number of samples at {} Hz", flag,
                            ms, sample_rate));
  }
}

int run_augment(const AugmentOptions &o, std::ostream &out) {
  require_jobs(o.jobs);
  PasConfig cfg;
  cfg.noise_len = seconds_to_samples(o.ln_sec, o.sample_rate);
  cfg.speech_min_len = seconds_to_samples(o.ls_min_sec, o.sample_rate);
  std::tie(cfg.snr_min, cfg.snr_max) = parse_snr_range(o.snr);
  cfg.mix_probability = o.mix_prob;
  cfg.master_seed = o.seed;
  cfg.validate();
  const MixMethod method = parse_method(o.method);
  const std::string suffix = method == MixMethod::kPartial ? ".pas.wav" : ".tan.wav";

  const auto inputs = read_manifest(o.manifest);
  const auto noise_paths = noise_sources(o.noise_manifest, o.noise_dir);
  std::vector<std::string> names;
  for (const auto &p : inputs) names.push_back(p.stem().string() + suffix);
  require_unique_names(names);

  std::vector<AudioBuffer> clips;
  for (const auto &p : noise_paths) clips.push_back(load_at_rate(p, o.sample_rate));
  const NoiseCatalog catalog(std::move(clips), cfg.noise_len);

  StagedDirectory staged(o.out_dir);
  std::vector<ProvenanceRecord> records(inputs.size());
  parallel_for(inputs.size(), o.jobs, [&](std::size_t i) {
    ProvenanceRecord &r = records[i];
    r.input = inputs[i].string();
    r.seed = cfg.master_seed;
    r.index = i;
    r.method = "none";
    try {
      const AudioBuffer speech = load_at_rate(inputs[i], o.sample_rate);
      AugmentedSample sample = augment_one(speech, catalog, cfg, method, i);
      save_wav(sample.audio, staged.path_for(names[i]));
      r.output = names[i];
      r.speech_offset = sample.crop_offset;
      if (sample.placement) {
        const PasPlacement &p = *sample.placement;
        r.mixed = true;
        r.method = std::string(method_name(method));
        r.noise = noise_paths[p.noise_id].string();
        r.speech_len = p.speech_len;
        r.speech_pos = p.speech_pos;
        r.snr_db = p.snr_db;
        r.noise_gain = p.noise_gain;
        r.noise_offset = p.noise_offset;
      }
    } catch (const Error &e) {
      if (!o.skip_errors) throw;
      r = ProvenanceRecord{};
      r.input = inputs[i].string();
      r.method = "none";
      r.seed = cfg.master_seed;
      r.index = i;
      r.error = e.what();
    }
  });

  std::ostringstream jsonl;
  std::size_t mixed = 0, failed = 0;
  for (const auto &r : records) {
    jsonl << r.to_json_line() << '\n';
    mixed += r.mixed;
    failed += !r.error.empty();
  }
  write_file_atomic(staged.path_for("augment.jsonl"), jsonl.str());
  staged.commit();
  fmt::print(out, "augment: {} inputs, {} mixed ({}), {} failed -> {}\n", inputs.size(),
             mixed, method_name(method), failed, o.out_dir.string());
  return kExitOk;
}

int run_testset(const TestsetOptions &o, std::ostream &out) {
  require_jobs(o.jobs);
  TestsetRequest req;
  req.clean = read_manifest(o.clean);
  req.noise = noise_sources(o.noise_manifest, o.noise_dir);
  req.snr_grid = o.snr_grid;
  req.seed = o.seed;
  req.out_dir = o.out_dir;
  req.jobs = o.jobs;
  req.sample_rate = o.sample_rate;
  const auto records = synth_testset(req);
  fmt::print(out, "synth-testset: {} utterances x {} SNRs = {} files -> {}\n",
             req.clean.size(), req.snr_grid.size(), records.size(), o.out_dir.string());
  return kExitOk;
}

int run_features(const FeatureOptions &o, std::ostream &out) {
  require_jobs(o.jobs);
  MelConfig cfg;
  cfg.sample_rate = o.sample_rate;
  cfg.fft_size = o.fft_size;
  cfg.win_length = ms_to_samples(o.win_ms, o.sample_rate, "--win-ms");
  cfg.hop_length = ms_to_samples(o.hop_ms, o.sample_rate, "--hop-ms");
  cfg.n_mels = o.n_mels;
  cfg.fmin = o.fmin;
  cfg.fmax = o.fmax;
  cfg.log_floor = o.log_floor;
  cfg.validate();

  const auto inputs = read_manifest(o.manifest);
  std::vector<std::string> names;
  for (const auto &p : inputs) names.push_back(p.stem().string() + ".lmel");
  require_unique_names(names);

  StagedDirectory staged(o.out_dir);
  std::vector<std::string> lines(inputs.size());
  parallel_for(inputs.size(), o.jobs, [&](std::size_t i) {
    nlohmann::ordered_json j;
    j["input"] = inputs[i].string();
    try {
      const MelSpectrogram mel = log_mel(load_at_rate(inputs[i], o.sample_rate), cfg);
      write_lmel(mel.data, staged.path_for(names[i]));
      j["output"] = names[i];
      j["n_frames"] = mel.data.rows();
      j["n_mels"] = mel.data.cols();
    } catch (const Error &e) {
      if (!o.skip_errors) throw;
      j["output"] = nullptr;
      j["error"] = e.what();
    }
    lines[i] = j.dump();
  });
  std::string jsonl;
  for (const auto &l : lines) jsonl += l + '\n';
  write_file_atomic(staged.path_for("features.jsonl"), jsonl);
  staged.commit();
  fmt::print(out, "features: {} inputs -> {}\n", inputs.size(), o.out_dir.string());
  return kExitOk;
}

int run_eer(const EerOptions &o, std::ostream &out) {
  const auto scores = read_scores(o.scores);
  const EerResult r = compute_eer(scores);
  fmt::print(out, "EER={:.4f} THR={:.6f}\n", 100.0 * r.eer, r.threshold);
  return kExitOk;
}

int run_pca(const PcaOptions &o, std::ostream &out) {
  EmbeddingSet set{read_embeddings(o.embeddings), read_labels(o.labels)};
  const PcaResult r = pca_project(set, o.k);
  write_projection(r.projection, set.labels, o.out);
  fmt::print(out, "pca: {} x {} -> {} components, explained variance", set.values.rows(),
             set.values.cols(), o.k);
  for (std::size_t c = 0; c < o.k; ++c) fmt::print(out, " {:.6f}", r.explained_variance_ratio[c]);
  fmt::print(out, "{}\n", r.degenerate_gap ? " (warning: degenerate eigenvalue gap)" : "");
  return kExitOk;
}

}  // namespace

const char *version() { return "1.0.0"; }

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Partial additive speech augmentation and speaker-verification evaluation",
               "pas-tool"};
  app.set_version_flag("--version", version());
  app.set_config("--config", "", "TOML key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  AugmentOptions aug;
  auto *augment = app.add_subcommand("augment", "Mix noise into a list of utterances");
  augment->add_option("--manifest", aug.manifest, "Speech WAV list, one path per line")
      ->required();
  augment->add_option("--noise", aug.noise_manifest, "Noise WAV list");
  augment->add_option("--noise-dir", aug.noise_dir, "Directory of noise WAVs");
  augment->add_option("--out-dir", aug.out_dir, "Output directory")->required();
  augment->add_option("--method", aug.method, "pas | traditional")->capture_default_str();
  augment->add_option("--ln-sec", aug.ln_sec, "Output / noise clip length in seconds")
      ->capture_default_str();
  augment->add_option("--ls-min-sec", aug.ls_min_sec, "Minimum speech length in seconds")
      ->capture_default_str();
  augment->add_option("--snr", aug.snr, "SNR range MIN:MAX in dB")->capture_default_str();
  augment->add_option("--mix-prob", aug.mix_prob, "Probability of mixing an utterance")
      ->capture_default_str();
  augment->add_option("--seed", aug.seed, "Master seed")->envname("PAS_SEED")
      ->capture_default_str();
  augment->add_option("--jobs", aug.jobs, "Worker threads")->capture_default_str();
  augment->add_option("--sample-rate", aug.sample_rate, "Required input rate in Hz")
      ->capture_default_str();
  augment->add_flag("--skip-errors", aug.skip_errors,
                    "Record unreadable inputs in the sidecar instead of aborting");

  TestsetOptions ts;
  auto *testset =
      app.add_subcommand("synth-testset", "Noisy copies of a test set on an SNR grid");
  testset->add_option("--clean", ts.clean, "Clean WAV list")->required();
  testset->add_option("--noise", ts.noise_manifest, "Noise WAV list");
  testset->add_option("--noise-dir", ts.noise_dir, "Directory of noise WAVs");
  testset->add_option("--out-dir", ts.out_dir, "Output directory")->required();
  testset->add_option("--snr-grid", ts.snr_grid, "Comma-separated SNRs in dB")
      ->delimiter(',')
      ->capture_default_str();
  testset->add_option("--seed", ts.seed, "Master seed")->envname("PAS_SEED")
      ->capture_default_str();
  testset->add_option("--jobs", ts.jobs, "Worker threads")->capture_default_str();
  testset->add_option("--sample-rate", ts.sample_rate, "Required input rate in Hz")
      ->capture_default_str();

  FeatureOptions fo;
  auto *features = app.add_subcommand("features", "Log-Mel spectrograms as LMEL files");
  features->add_option("--manifest", fo.manifest, "WAV list")->required();
  features->add_option("--out-dir", fo.out_dir, "Output directory")->required();
  features->add_option("--fft-size", fo.fft_size)->capture_default_str();
  features->add_option("--win-ms", fo.win_ms)->capture_default_str();
  features->add_option("--hop-ms", fo.hop_ms)->capture_default_str();
  features->add_option("--n-mels", fo.n_mels)->capture_default_str();
  features->add_option("--fmin", fo.fmin)->capture_default_str();
  features->add_option("--fmax", fo.fmax)->capture_default_str();
  features->add_option("--log-floor", fo.log_floor)->capture_default_str();
  features->add_option("--jobs", fo.jobs)->capture_default_str();
  features->add_option("--sample-rate", fo.sample_rate)->capture_default_str();
  features->add_flag("--skip-errors", fo.skip_errors);

  EerOptions eo;
  auto *eer = app.add_subcommand("eer", "Equal error rate of a 'label score' file");
  eer->add_option("--scores,scores", eo.scores, "Score file")->required();

  PcaOptions po;
  auto *pca = app.add_subcommand("pca", "Project embeddings onto principal components");
  pca->add_option("--embeddings", po.embeddings, "LMEL matrix or numeric CSV")->required();
  pca->add_option("--labels", po.labels, "One label per embedding row")->required();
  pca->add_option("--k", po.k, "Number of components")->capture_default_str();
  pca->add_option("--out", po.out, "Output CSV")->required();

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (augment->parsed()) return run_augment(aug, out);
    if (testset->parsed()) return run_testset(ts, out);
    if (features->parsed()) return run_features(fo, out);
    if (eer->parsed()) return run_eer(eo, out);
    if (pca->parsed()) return run_pca(po, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return is_io_error(e.code()) ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitValidation;
}

int run(int argc, const char *const *argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace pas::cli
