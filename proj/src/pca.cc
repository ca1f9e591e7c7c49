// src/pca.cc

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

#include "pas/pca.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pas/error.h"
#include "pas/features.h"
#include "pas/staging.h"

namespace pas {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void multiply(const Matrix &a, std::span<const double> v, std::span<double> out) {
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = dot(a.row(r), v);
}

// Leading eigenpair of a symmetric PSD matrix.  Returns eigenvalue 0 and
// leaves `v` untouched when the matrix is numerically zero.
double power_iteration(const Matrix &a, std::vector<double> &v,
                       const PowerIterationOptions &opts) {
  const std::size_t n = a.rows();
  // Start from the matrix's largest column, which lies in its range.
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t c = 0; c < n; ++c) {
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += a(r, c) * a(r, c);
    if (norm > best_norm) {
      best_norm = norm;
      best = c;
    }
  }
  if (!(best_norm > 0.0)) return 0.0;
  const double scale = std::sqrt(best_norm);
  for (std::size_t r = 0; r < n; ++r) v[r] = a(r, best) / scale;

  std::vector<double> w(n);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    multiply(a, v, w);
    const double norm = std::sqrt(dot(w, w));
    if (norm == 0.0) return 0.0;
    double diff = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      w[r] /= norm;
      diff += (w[r] - v[r]) * (w[r] - v[r]);
    }
    v.swap(w);
    if (std::sqrt(diff) < opts.tolerance) break;
  }
  multiply(a, v, w);
  return dot(v, w);
}

void canonicalize_sign(std::span<double> v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  if (v[arg] < 0)
    for (double &x : v) x = -x;
}

}  // namespace

void EmbeddingSet::validate() const {
  if (values.rows() < 2)
    throw Error(Errc::kInvalidConfig, "embedding set needs at least 2 rows");
  if (values.cols() < 2)
    throw Error(Errc::kInvalidConfig, "embeddings need at least 2 dimensions");
  if (labels.size() != values.rows())
    throw Error(Errc::kInvalidConfig,
                fmt::format("{} labels for {} embeddings", labels.size(), values.rows()));
  for (double v : values.data())
    if (!std::isfinite(v)) throw Error(Errc::kInvalidConfig, "non-finite embedding value");
}

PcaResult pca_project(const EmbeddingSet &set, std::size_t k,
                      const PowerIterationOptions &opts) {
  set.validate();
  const std::size_t N = set.values.rows(), D = set.values.cols();
  const std::size_t spectrum = std::min(N - 1, D);
  if (k < 1 || k > spectrum)
    throw Error(Errc::kInvalidConfig,
                fmt::format("k = {} outside [1, min(N - 1, D) = {}]", k, spectrum));

  Matrix centered = set.values;
  for (std::size_t d = 0; d < D; ++d) {
    double mean = 0.0;
    for (std::size_t n = 0; n < N; ++n) mean += centered(n, d);
    mean /= static_cast<double>(N);
    for (std::size_t n = 0; n < N; ++n) centered(n, d) -= mean;
  }
  Matrix cov(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i; j < D; ++j) {
      double acc = 0.0;
      for (std::size_t n = 0; n < N; ++n) acc += centered(n, i) * centered(n, j);
      cov(i, j) = cov(j, i) = acc / static_cast<double>(N - 1);
    }
  double trace = 0.0;
  for (std::size_t d = 0; d < D; ++d) trace += cov(d, d);
  if (!(trace > 0.0))
    throw Error(Errc::kRankDeficient, "all embeddings are identical");
  const double zero_tol = 1e-10 * trace;

  PcaResult result;
  result.components = Matrix(k, D);
  Matrix deflated = cov;
  std::vector<double> v(D);
  for (std::size_t c = 0; c < spectrum; ++c) {
    double lambda = power_iteration(deflated, v, opts);
    if (lambda <= zero_tol) {
      result.eigenvalues.resize(spectrum, 0.0);
      break;
    }
    result.eigenvalues.push_back(lambda);
    canonicalize_sign(v);
    if (c < k) std::copy(v.begin(), v.end(), result.components.row(c).begin());
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) deflated(i, j) -= lambda * v[i] * v[j];
  }
  if (result.eigenvalues[k - 1] <= 0.0)
    throw Error(Errc::kRankDeficient,
                fmt::format("requested {} components but the data has rank < {}", k, k));

  for (double lambda : result.eigenvalues)
    result.explained_variance_ratio.push_back(lambda / trace);
  for (std::size_t c = 0; c + 1 < spectrum && c < k; ++c) {
    const double next = result.eigenvalues[c + 1];
    if (next > 0.0 && result.eigenvalues[c] / next < 1.0 + 1e-9)
      result.degenerate_gap = true;
  }

  result.projection = Matrix(N, k);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t c = 0; c < k; ++c)
      result.projection(n, c) = dot(centered.row(n), result.components.row(c));
  return result;
}

std::string csv_escape(const std::string &field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_projection(const Matrix &coords, const std::vector<std::string> &labels,
                      const std::filesystem::path &path) {
  if (coords.rows() != labels.size())
    throw Error(Errc::kDimensionMismatch,
                fmt::format("{} rows but {} labels", coords.rows(), labels.size()));
  std::string text = "label";
  for (std::size_t c = 0; c < coords.cols(); ++c) text += fmt::format(",pc{}", c + 1);
  text += '\n';
  for (std::size_t n = 0; n < coords.rows(); ++n) {
    text += csv_escape(labels[n]);
    for (double v : coords.row(n)) text += fmt::format(",{:.17g}", v);
    text += '\n';
  }
  write_file_atomic(path, text);
}

Matrix read_embeddings(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kNotFound, path.string());
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, "LMEL", 4) == 0) return read_lmel(path);

  in.clear();
  in.seekg(0);
  std::vector<double> values;
  std::size_t rows = 0, cols = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(fields, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
          throw std::invalid_argument(cell);
      } catch (const std::exception &) {
        throw Error(Errc::kInvalidConfig,
                    fmt::format("{}:{}: bad number '{}'", path.string(), lineno, cell));
      }
      ++count;
    }
    if (rows == 0) cols = count;
    if (count != cols)
      throw Error(Errc::kInvalidConfig,
                  fmt::format("{}:{}: expected {} columns, got {}", path.string(),
                              lineno, cols, count));
    ++rows;
  }
  Matrix m(rows, cols);
  std::copy(values.begin(), values.end(), m.data().begin());
  return m;
}

std::vector<std::string> read_labels(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kNotFound, path.string());
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) labels.push_back(line);
  }
  return labels;
}

}  // namespace pas
