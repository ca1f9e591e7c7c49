// tests/support/oracles.cc

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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace pas::testing {

double measured_snr_db(std::span<const double> speech, std::span<const double> noise) {
  long double ps = 0, pn = 0;
  for (double v : speech) ps += static_cast<long double>(v) * v;
  for (double v : noise) pn += static_cast<long double>(v) * v;
  ps /= speech.size();
  pn /= noise.size();
  return static_cast<double>(10.0L * std::log10(ps / pn));
}

std::vector<double> direct_dft_power(std::span<const double> frame, std::size_t fft_size) {
  std::vector<double> out(fft_size / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    long double re = 0, im = 0;
    for (std::size_t n = 0; n < frame.size(); ++n) {
      const long double phase =
          2.0L * std::numbers::pi_v<long double> * static_cast<long double>((k * n) % fft_size) /
          static_cast<long double>(fft_size);
      re += frame[n] * std::cos(phase);
      im -= frame[n] * std::sin(phase);
    }
    out[k] = static_cast<double>(re * re + im * im);
  }
  return out;
}

double brute_force_eer(const std::vector<OracleScore> &scores) {
  std::set<double> distinct;
  double n_t = 0, n_n = 0;
  for (const auto &s : scores) {
    distinct.insert(s.score);
    (s.target ? n_t : n_n) += 1;
  }
  std::vector<std::pair<double, double>> points;  // (FAR, FRR)
  for (double thr : distinct) {
    double fa = 0, fr = 0;
    for (const auto &s : scores) {
      if (!s.target && s.score >= thr) fa += 1;
      if (s.target && s.score < thr) fr += 1;
    }
    points.emplace_back(fa / n_n, fr / n_t);
  }
  points.emplace_back(0.0, 1.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double d1 = points[i].first - points[i].second;
    if (d1 <= 0) {
      if (d1 == 0) return points[i].first;
      const double d0 = points[i - 1].first - points[i - 1].second;
      const double t = d0 / (d0 - d1);
      return points[i - 1].first + t * (points[i].first - points[i - 1].first);
    }
  }
  return points.back().first;
}

EigenSystem jacobi_eigen(const Matrix &symmetric) {
  const std::size_t n = symmetric.rows();
  Matrix a = symmetric;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenSystem out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    out.values[r] = a(order[r], order[r]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(r, k) = v(k, order[r]);
  }
  return out;
}

std::vector<double> weighted_moments(const Matrix &h, std::span<const double> w) {
  const std::size_t D = h.cols();
  std::vector<double> out(2 * D);
  for (std::size_t d = 0; d < D; ++d) {
    long double mu = 0;
    for (std::size_t t = 0; t < h.rows(); ++t) mu += static_cast<long double>(w[t]) * h(t, d);
    long double var = 0;
    for (std::size_t t = 0; t < h.rows(); ++t) {
      const long double dev = h(t, d) - mu;
      var += w[t] * dev * dev;
    }
    out[d] = static_cast<double>(mu);
    out[D + d] = static_cast<double>(std::sqrt(var));
  }
  return out;
}

std::vector<double> two_pass_stats(const Matrix &h) {
  const std::size_t T = h.rows(), D = h.cols();
  std::vector<double> out(2 * D);
  for (std::size_t d = 0; d < D; ++d) {
    long double mean = 0;
    for (std::size_t t = 0; t < T; ++t) mean += h(t, d);
    mean /= T;
    long double var = 0;
    for (std::size_t t = 0; t < T; ++t) var += (h(t, d) - mean) * (h(t, d) - mean);
    out[d] = static_cast<double>(mean);
    out[D + d] = static_cast<double>(std::sqrt(var / T));
  }
  return out;
}

std::vector<std::vector<double>> naive_se(const std::vector<std::vector<double>> &x,
                                          const Matrix &w1, const Matrix &w2) {
  const std::size_t C = x.size(), H = w1.rows();
  double s[64], z[64];
  for (std::size_t c = 0; c < C; ++c) {
    s[c] = 0;
    for (double v : x[c]) s[c] += v;
    s[c] /= x[c].size();
  }
  for (std::size_t j = 0; j < H; ++j) {
    z[j] = 0;
    for (std::size_t c = 0; c < C; ++c) z[j] += w1(j, c) * s[c];
    if (z[j] < 0) z[j] = 0;
  }
  std::vector<std::vector<double>> out = x;
  for (std::size_t c = 0; c < C; ++c) {
    double a = 0;
    for (std::size_t j = 0; j < H; ++j) a += w2(c, j) * z[j];
    const double gate = 1.0 / (1.0 + std::exp(-a));
    for (double &v : out[c]) v *= gate;
  }
  return out;
}

}  // namespace pas::testing
