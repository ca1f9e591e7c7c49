// tests/acceptance/acceptance_test.cc

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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pas/attention.h"
#include "pas/augment.h"
#include "pas/cli.h"
#include "pas/eval.h"
#include "pas/features.h"
#include "pas/manifest.h"
#include "pas/pca.h"
#include "pas/wav_io.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace pas {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AudioBuffer buf(std::vector<double> v) { return AudioBuffer(std::move(v), 16000); }

// Overlap SNR of a mixed sample, measured from the recorded gain and noise.
double overlap_snr(std::span<const double> speech, const AudioBuffer &noise,
                   std::size_t noise_start, double gain) {
  std::vector<double> scaled(speech.size());
  for (std::size_t i = 0; i < speech.size(); ++i) scaled[i] = gain * noise[noise_start + i];
  return testing::measured_snr_db(speech, scaled);
}

Outcome snr_exactness() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> len(1600, 8000);
  std::uniform_real_distribution<double> level(0.01, 0.5), snr(0, 20);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t ln = len(rng);
    const auto x = buf(testing::speechlike(rng, ln + len(rng) / 2, 16000));
    const auto n = buf(testing::gaussian_noise(rng, ln + 4000 + len(rng), level(rng)));
    // PAS with random draws.
    PasConfig cfg;
    cfg.noise_len = ln;
    cfg.speech_min_len = ln / 4;
    cfg.master_seed = i;
    SampleStream stream(cfg.master_seed, i);
    const std::size_t lens[] = {n.size()};
    const PasPlacement p = draw_placement(cfg, stream, lens, x.size());
    const auto mixed = apply_pas(x, n, cfg, p);
    const double got = overlap_snr(x.samples().subspan(p.speech_offset, p.speech_len), n,
                                   p.noise_offset + p.speech_pos, mixed.placement->noise_gain);
    worst = std::max(worst, std::abs(got - p.snr_db));
    // Traditional over the whole utterance.
    const double s = snr(rng);
    const auto tan = apply_traditional(x, n, s);
    const double g = mixing_gain(x.samples(), n.samples().first(x.size()), s);
    worst = std::max(worst, std::abs(overlap_snr(x.samples(), n, 0, g) - s));
    std::vector<double> diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = tan[j] - x[j];
    worst = std::max(worst, std::abs(testing::measured_snr_db(x.samples(), diff) - s));
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.detail = fmt::format("max |error| = {:.3g} dB over 2000 mixes, {:.2f} s", worst, secs);
  o.require(worst <= 1e-9, o.detail);
  o.require(secs < 30, fmt::format("runtime {:.2f} s exceeds 30 s", secs));
  return o;
}

Outcome degenerate_equivalence() {
  std::mt19937_64 rng(1002);
  std::uniform_int_distribution<std::size_t> len(800, 6000);
  Outcome o;
  std::size_t compared = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t ln = len(rng);
    const auto x = buf(testing::speechlike(rng, ln + len(rng), 16000));
    std::vector<AudioBuffer> noise = {buf(testing::gaussian_noise(rng, ln + len(rng), 0.1)),
                                      buf(testing::gaussian_noise(rng, ln, 0.3))};
    PasConfig cfg;
    cfg.noise_len = ln;
    cfg.speech_min_len = ln;
    cfg.mix_probability = 1.0;
    cfg.master_seed = 77;
    // Direct use of the mixing primitives on the same draws.
    SampleStream stream(cfg.master_seed, i);
    const std::size_t lens[] = {noise[0].size(), noise[1].size()};
    const PasPlacement p = draw_placement(cfg, stream, lens, x.size());
    const auto pas = apply_pas(x, noise[p.noise_id], cfg, p);
    const auto tan = apply_traditional(sample_segment(x, ln, p.speech_offset),
                                       sample_segment(noise[p.noise_id], ln, p.noise_offset),
                                       p.snr_db);
    bool same = pas.audio.size() == tan.size();
    for (std::size_t j = 0; same && j < tan.size(); ++j) same = pas.audio[j] == tan[j];
    // Full pipeline: both methods draw identically when L_s_min = L_n.
    const NoiseCatalog catalog(noise, ln);
    const auto a = augment_one(x, catalog, cfg, MixMethod::kPartial, i);
    const auto b = augment_one(x, catalog, cfg, MixMethod::kTraditional, i);
    same = same && a.audio.size() == b.audio.size();
    for (std::size_t j = 0; same && j < a.audio.size(); ++j) same = a.audio[j] == b.audio[j];
    o.require(same, fmt::format("case {} differs", i));
    compared += tan.size() + a.audio.size();
  }
  if (o.pass) o.detail = fmt::format("200 cases, {} samples bit-identical", compared);
  return o;
}

Outcome structural_purity() {
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<std::size_t> len(1000, 6000);
  double worst_overlap = 0, worst_outside = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t ln = len(rng);
    const auto x = buf(testing::speechlike(rng, ln, 16000));
    const auto n = buf(testing::gaussian_noise(rng, ln + len(rng), 0.2));
    PasConfig cfg;
    cfg.noise_len = ln;
    cfg.speech_min_len = ln / 5;
    SampleStream stream(5, i);
    const std::size_t lens[] = {n.size()};
    const PasPlacement p = draw_placement(cfg, stream, lens, x.size());
    const auto out = apply_pas(x, n, cfg, p);
    const double g = out.placement->noise_gain;
    for (std::size_t t = 0; t < ln; ++t) {
      const double residual = out.audio[t] - g * n[p.noise_offset + t];
      if (t >= p.speech_pos && t < p.speech_pos + p.speech_len) {
        worst_overlap = std::max(
            worst_overlap, std::abs(residual - x[p.speech_offset + t - p.speech_pos]));
      } else {
        worst_outside = std::max(worst_outside, std::abs(residual));
      }
    }
  }
  Outcome o;
  o.detail = fmt::format("noise-only max |residual| = {:.3g}, overlap max error = {:.3g}",
                         worst_outside, worst_overlap);
  o.require(worst_outside == 0.0 && worst_overlap <= 1e-12, o.detail);
  return o;
}

Outcome distribution() {
  PasConfig cfg = PasConfig::defaults(16000);
  cfg.master_seed = 20240;
  const std::size_t lens[] = {51200, 80000, 160000};
  const int draws = 100000;
  double sum = 0;
  int mixed = 0;
  for (int i = 0; i < draws; ++i) {
    SampleStream stream(cfg.master_seed, i);
    mixed += draw_mix_decision(cfg, stream);
    sum += static_cast<double>(draw_placement(cfg, stream, lens, 64000).speech_len);
  }
  const double mean = sum / draws;
  const double target = (16000.0 + 51200.0) / 2;
  const double frac = static_cast<double>(mixed) / draws;
  const double half = 2.5758293035489 * std::sqrt(0.75 * 0.25 / draws);
  Outcome o;
  o.detail = fmt::format("mean L_s = {:.1f} (target {:.0f}, {:.3f}% off); mixed fraction {:.5f} "
                         "(interval [{:.5f}, {:.5f}])",
                         mean, target, 100 * std::abs(mean - target) / target, frac,
                         0.75 - half, 0.75 + half);
  o.require(std::abs(mean - target) <= 0.01 * target, o.detail);
  o.require(std::abs(frac - 0.75) <= half, o.detail);
  return o;
}

Outcome eer_oracle() {
  std::mt19937_64 rng(1005);
  double worst = 0;
  for (int set = 0; set < 100; ++set) {
    const int levels = set % 3 == 0 ? 0 : 5 + set;
    std::bernoulli_distribution target(0.1 + 0.008 * set);
    std::normal_distribution<double> z(0, 1);
    std::uniform_int_distribution<int> q(0, std::max(levels, 1) - 1);
    std::vector<LabeledScore> s(1000);
    std::vector<testing::OracleScore> ref;
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i].target = i == 0 ? true : i == 1 ? false : target(rng);
      s[i].score = levels ? q(rng) + (s[i].target ? levels / 3 : 0) : z(rng) + 1.5 * s[i].target;
      ref.push_back({s[i].target, s[i].score});
    }
    worst = std::max(worst, std::abs(compute_eer(s).eer - testing::brute_force_eer(ref)));
  }
  std::vector<LabeledScore> perfect;
  for (int i = 0; i < 50; ++i) perfect.push_back({i % 2 == 0, i % 2 == 0 ? 1.0 : 0.0});
  const double e_perfect = compute_eer(perfect).eer;
  for (auto &p : perfect) p.target = !p.target;
  const double e_swapped = compute_eer(perfect).eer;
  Outcome o;
  o.detail = fmt::format("max |EER - oracle| = {:.3g} over 100 sets; perfect = {}, swapped = {}",
                         worst, e_perfect, e_swapped);
  o.require(worst <= 1e-9 && e_perfect == 0.0 && e_swapped == 1.0, o.detail);
  return o;
}

Outcome feature_shape() {
  std::mt19937_64 rng(1006);
  const MelConfig cfg = MelConfig::defaults(16000);
  const auto mel = log_mel(buf(testing::gaussian_noise(rng, 51200, 0.1)), cfg);
  Outcome o;
  o.require(mel.data.rows() == 318 && mel.data.cols() == 80,
            fmt::format("shape {} x {}", mel.data.rows(), mel.data.cols()));
  std::uniform_int_distribution<std::size_t> pick(1, cfg.n_bins() - 2);
  std::string bins;
  for (int i = 0; i < 10; ++i) {
    const std::size_t k = pick(rng);
    const double f = static_cast<double>(k) * cfg.sample_rate / cfg.fft_size;
    const auto frame = testing::sine(f, cfg.sample_rate, cfg.win_length, 0.5, 0.7);
    const auto p = stft_power(buf(frame), cfg);
    std::size_t best = 0;
    for (std::size_t b = 1; b < p.cols(); ++b)
      if (p(0, b) > p(0, best)) best = b;
    // The oracle DFT of the windowed frame must peak at the same bin.
    const auto w = hamming_window(cfg.win_length);
    std::vector<double> windowed(frame.size());
    for (std::size_t j = 0; j < frame.size(); ++j) windowed[j] = frame[j] * w[j];
    const auto ref = testing::direct_dft_power(windowed, cfg.fft_size);
    std::size_t ref_best = 0;
    for (std::size_t b = 1; b < ref.size(); ++b)
      if (ref[b] > ref[ref_best]) ref_best = b;
    o.require(best == k && ref_best == k,
              fmt::format("bin {} peaked at {} (oracle {})", k, best, ref_best));
    bins += fmt::format("{}{}", bins.empty() ? "" : ",", k);
  }
  if (o.pass) o.detail = fmt::format("318 x 80; peak bins {} all exact", bins);
  return o;
}

Outcome attention_math() {
  std::mt19937_64 rng(1007);
  std::normal_distribution<double> z(0, 1);
  std::exponential_distribution<double> ex(1);
  double uniform_err = 0, oracle_err = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix h(10 + t, 8);
    for (double &v : h.data()) v = 3 * z(rng) + 1;
    const auto a = attentive_statistics_pooling(h, AttentionWeights::uniform(h.rows()));
    const auto b = statistics_pooling(h);
    for (std::size_t i = 0; i < a.size(); ++i)
      uniform_err = std::max(uniform_err, std::abs(a[i] - b[i]));
    std::vector<double> w(h.rows());
    double s = 0;
    for (double &v : w) s += v = ex(rng);
    for (double &v : w) v /= s;
    const auto got = attentive_statistics_pooling(h, AttentionWeights(w));
    const auto ref = testing::weighted_moments(h, w);
    for (std::size_t i = 0; i < got.size(); ++i)
      oracle_err = std::max(oracle_err, std::abs(got[i] - ref[i]));
  }
  std::vector<std::vector<double>> x(16, std::vector<double>(40));
  for (auto &ch : x)
    for (double &v : ch) v = z(rng);
  const auto se = se_block(x, Matrix(4, 16), Matrix(16, 4));
  bool half = true;
  for (std::size_t c = 0; c < x.size(); ++c)
    for (std::size_t i = 0; i < x[c].size(); ++i) half = half && se[c][i] == 0.5 * x[c][i];
  Outcome o;
  o.detail = fmt::format("uniform ASP vs pooling {:.3g}; ASP vs oracle {:.3g}; zero-weight SE "
                         "exactly 0.5x: {}",
                         uniform_err, oracle_err, half ? "yes" : "no");
  o.require(uniform_err <= 1e-9 && oracle_err <= 1e-12 && half, o.detail);
  return o;
}

Outcome pca_oracle() {
  std::mt19937_64 rng(1008);
  std::normal_distribution<double> z(0, 1);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    EmbeddingSet set{Matrix(20, 5), std::vector<std::string>(20, "x")};
    for (double &v : set.values.data()) v = z(rng);
    const auto res = pca_project(set, 2);
    // Dense oracle on the sample covariance.
    const Matrix &x = set.values;
    std::vector<double> mean(5, 0.0);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < 5; ++j) mean[j] += x(i, j) / 20;
    Matrix cov(5, 5);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        long double s = 0;
        for (std::size_t i = 0; i < 20; ++i) s += (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
        cov(a, b) = static_cast<double>(s / 19);
      }
    const auto ref = testing::jacobi_eigen(cov);
    for (std::size_t k = 0; k < 2; ++k) {
      double dot = 0;
      for (std::size_t j = 0; j < 5; ++j) dot += res.components(k, j) * ref.vectors(k, j);
      const double sign = dot < 0 ? -1 : 1;
      for (std::size_t j = 0; j < 5; ++j)
        worst = std::max(worst, std::abs(res.components(k, j) - sign * ref.vectors(k, j)));
      for (std::size_t i = 0; i < 20; ++i) {
        double proj = 0;
        for (std::size_t j = 0; j < 5; ++j) proj += (x(i, j) - mean[j]) * ref.vectors(k, j);
        worst = std::max(worst, std::abs(res.projection(i, k) - sign * proj));
      }
    }
  }
  EmbeddingSet line{Matrix(8, 2), std::vector<std::string>(8, "l")};
  for (std::size_t i = 0; i < 8; ++i) {
    line.values(i, 0) = 0.3 * i + 5;
    line.values(i, 1) = 0.6 * i - 2;
  }
  const auto res = pca_project(line, 1);
  const double dir_err = std::max(std::abs(std::abs(res.components(0, 0)) - 1 / std::sqrt(5.0)),
                                  std::abs(std::abs(res.components(0, 1)) - 2 / std::sqrt(5.0)));
  Outcome o;
  o.detail = fmt::format("max deviation {:.3g} over 50 sets; collinear direction error {:.3g}, "
                         "second explained variance {}",
                         worst, dir_err, res.explained_variance_ratio[1]);
  o.require(worst <= 1e-6 && dir_err <= 1e-9 && res.explained_variance_ratio[1] == 0.0,
            o.detail);
  return o;
}

int run_cli(std::vector<std::string> args, std::string &err) {
  args.insert(args.begin(), "pas-tool");
  std::ostringstream out, errs;
  const int code = cli::run(args, out, errs);
  err = errs.str();
  return code;
}

bool same_tree(const fs::path &a, const fs::path &b, std::size_t &files, std::string &why) {
  std::vector<fs::path> names;
  for (const auto &e : fs::directory_iterator(a)) names.push_back(e.path().filename());
  std::size_t other = 0;
  for ([[maybe_unused]] const auto &e : fs::directory_iterator(b)) ++other;
  if (other != names.size()) {
    why = "file counts differ";
    return false;
  }
  for (const auto &n : names) {
    if (testing::read_bytes(a / n) != testing::read_bytes(b / n)) {
      why = n.string() + " differs";
      return false;
    }
  }
  files = names.size();
  return true;
}

Outcome end_to_end_determinism(const fs::path &root) {
  const auto t0 = Clock::now();
  const auto speech = testing::write_corpus(root, "utt", 32, 12000, 80000, 9, false);
  const auto noise = testing::write_corpus(root, "noise", 6, 20000, 120000, 10, true);
  Outcome o;
  auto run = [&](const std::string &out, int jobs) {
    std::string err;
    const int code = run_cli({"augment", "--manifest", speech.string(), "--noise",
                              noise.string(), "--out-dir", (root / out).string(), "--seed",
                              "4242", "--jobs", std::to_string(jobs)},
                             err);
    o.require(code == 0, "augment failed: " + err);
  };
  run("j1a", 1);
  run("j1b", 1);
  run("j8", 8);
  std::size_t files = 0;
  std::string why;
  if (o.pass) {
    o.require(same_tree(root / "j1a", root / "j1b", files, why), "rerun: " + why);
    o.require(same_tree(root / "j1a", root / "j8", files, why), "--jobs 8: " + why);
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60, fmt::format("runtime {:.2f} s exceeds 60 s", secs));
  if (o.pass)
    o.detail = fmt::format("{} files byte-identical across rerun and --jobs 1/8, {:.2f} s",
                           files, secs);
  return o;
}

Outcome testset_count(const fs::path &root) {
  const auto clean = testing::write_corpus(root, "clean", 10, 8000, 48000, 11, false);
  testing::write_corpus(root / "noise", "n", 3, 4000, 100000, 12, true);
  Outcome o;
  std::string err;
  const int code = run_cli({"synth-testset", "--clean", clean.string(), "--noise-dir",
                            (root / "noise").string(), "--out-dir", (root / "ts").string(),
                            "--snr-grid", "0,5,10,15,20", "--seed", "31"},
                           err);
  o.require(code == 0, "synth-testset failed: " + err);
  if (!o.pass) return o;
  std::size_t wavs = 0;
  for (const auto &e : fs::directory_iterator(root / "ts")) wavs += e.path().extension() == ".wav";
  const auto records = read_provenance(root / "ts" / "testset.jsonl");
  double worst = 0;
  for (const auto &r : records) {
    const auto x = load_wav(r.input);
    const auto n = ensure_min_length(load_wav(r.noise), x.size());
    worst = std::max(worst, std::abs(overlap_snr(x.samples(), n, r.noise_offset, r.noise_gain) -
                                     r.snr_db));
    o.require(fs::exists(root / "ts" / r.output), "missing " + r.output);
  }
  o.detail = fmt::format("{} WAVs, {} records, max SNR error {:.3g} dB", wavs, records.size(),
                         worst);
  o.require(wavs == 50 && records.size() == 50 && worst <= 1e-9, o.detail);
  return o;
}

}  // namespace
}  // namespace pas

int main() {
  using namespace pas;
  testing::TempDir scratch;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"snr-exactness", snr_exactness},
      {"degenerate-equivalence", degenerate_equivalence},
      {"structural-purity", structural_purity},
      {"placement-distribution", distribution},
      {"eer-oracle", eer_oracle},
      {"feature-shape", feature_shape},
      {"attention-math", attention_math},
      {"pca-oracle", pca_oracle},
      {"end-to-end-determinism", [&] { return end_to_end_determinism(scratch / "e2e"); }},
      {"testset-count", [&] { return testset_count(scratch / "testset"); }},
  };
  int failures = 0;
  for (const auto &[name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    fmt::print("{} {:<24} {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
