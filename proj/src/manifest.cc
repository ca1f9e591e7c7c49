// src/manifest.cc

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

#include "pas/manifest.h"

#include <algorithm>
#include <fstream>
#include <string>

#include "pas/error.h"

namespace fs = std::filesystem;

namespace pas {

std::vector<fs::path> read_manifest(const fs::path &path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw Error(Errc::kNotFound, path.string());
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  std::vector<fs::path> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<fs::path> list_wav_files(const fs::path &dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::kNotFound, dir.string());
  std::vector<fs::path> out;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav")
      out.push_back(entry.path());
  }
  if (ec) throw Error(Errc::kIoError, "cannot list " + dir.string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pas
