// src/staging.cc

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

#include "pas/staging.h"

#include <unistd.h>

#include <atomic>
#include <fstream>

#include "pas/error.h"

namespace fs = std::filesystem;

namespace pas {

namespace {
std::atomic<unsigned> staging_serial{0};
}

StagedDirectory::StagedDirectory(fs::path out_dir) : out_dir_(std::move(out_dir)) {
  std::error_code ec;
  fs::create_directories(out_dir_, ec);
  if (ec || !fs::is_directory(out_dir_))
    throw Error(Errc::kIoError, "cannot create output directory " + out_dir_.string());
  staging_ = out_dir_ / (".staging-" + std::to_string(::getpid()) + "-" +
                         std::to_string(staging_serial++));
  fs::remove_all(staging_, ec);
  if (!fs::create_directory(staging_, ec) || ec)
    throw Error(Errc::kIoError, "cannot create staging directory " + staging_.string());
}

StagedDirectory::~StagedDirectory() {
  if (committed_) return;
  std::error_code ec;
  fs::remove_all(staging_, ec);
}

fs::path StagedDirectory::path_for(const std::string &name) {
  if (name.empty() || name.find('/') != std::string::npos || name == "." || name == "..")
    throw Error(Errc::kInvalidConfig, "invalid output name '" + name + "'");
  {
    std::lock_guard<std::mutex> lock(names_mu_);
    names_.push_back(name);
  }
  return staging_ / name;
}

void StagedDirectory::commit() {
  std::error_code ec;
  for (const auto &name : names_) {
    if (!fs::exists(staging_ / name)) continue;
    fs::rename(staging_ / name, out_dir_ / name, ec);
    if (ec)
      throw Error(Errc::kIoError, "cannot move " + name + " into " +
                                      out_dir_.string() + ": " + ec.message());
  }
  fs::remove_all(staging_, ec);
  committed_ = true;
}

void write_file_atomic(const fs::path &path, const std::string &contents) {
  fs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::kIoError, "cannot open " + tmp.string());
    out << contents;
    if (!out) throw Error(Errc::kIoError, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::kIoError, "cannot rename onto " + path.string());
  }
}

}  // namespace pas
