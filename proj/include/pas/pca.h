// include/pas/pca.h

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

#ifndef PAS_PCA_H_
#define PAS_PCA_H_

#include <filesystem>
#include <string>
#include <vector>

#include "pas/matrix.h"

namespace pas {

// N x D embeddings with one tag per row (speaker, noise type, scenario...).
struct EmbeddingSet {
  Matrix values;
  std::vector<std::string> labels;

  // InvalidConfig unless N >= 2, D >= 2, entries finite and one label per row.
  void validate() const;
};

struct PcaResult {
  Matrix projection;  // N x k, centered data times components
  Matrix components;  // k x D, orthonormal rows
  // Fraction of total variance per component for the whole spectrum
  // (min(N - 1, D) entries, descending); the first k belong to `components`.
  std::vector<double> explained_variance_ratio;
  std::vector<double> eigenvalues;  // same length as explained_variance_ratio
  // Set when two of the leading k + 1 eigenvalues are within a ratio of
  // 1 + 1e-9, in which case the affected directions are not unique.
  bool degenerate_gap = false;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

// Principal components via power iteration with deflation on the 1/(N - 1)
// sample covariance.  Each component's sign is fixed so that its
// largest-magnitude entry is positive.  Requires 1 <= k <= min(N - 1, D);
// RankDeficient if fewer than k eigenvalues are nonzero.
PcaResult pca_project(const EmbeddingSet &set, std::size_t k,
                      const PowerIterationOptions &opts = {});

// CSV with header "label,pc1,...,pck" and one row per embedding, values with
// 17 significant digits.  Labels are quoted per RFC 4180 when needed.
void write_projection(const Matrix &coords, const std::vector<std::string> &labels,
                      const std::filesystem::path &path);

std::string csv_escape(const std::string &field);

// Embeddings from an LMEL container or a headerless numeric CSV.
Matrix read_embeddings(const std::filesystem::path &path);
// One label per line.
std::vector<std::string> read_labels(const std::filesystem::path &path);

}  // namespace pas

#endif  // PAS_PCA_H_
