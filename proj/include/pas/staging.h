// include/pas/staging.h

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

#ifndef PAS_STAGING_H_
#define PAS_STAGING_H_

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

namespace pas {

// Collects a command's outputs in a hidden directory inside `out_dir` and
// moves them into place only on commit(), so a failed run leaves no partial
// results.  The staging directory is removed on destruction if not committed.
class StagedDirectory {
 public:
  explicit StagedDirectory(std::filesystem::path out_dir);
  ~StagedDirectory();

  StagedDirectory(const StagedDirectory &) = delete;
  StagedDirectory &operator=(const StagedDirectory &) = delete;

  // Staging location for an output named `name` (a plain file name).
  std::filesystem::path path_for(const std::string &name);

  void commit();

  const std::filesystem::path &out_dir() const noexcept { return out_dir_; }

 private:
  std::filesystem::path out_dir_;
  std::filesystem::path staging_;
  std::mutex names_mu_;  // path_for may be called from worker threads
  std::vector<std::string> names_;
  bool committed_ = false;
};

// Writes `contents` to `path` via a temporary sibling and a rename.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);

}  // namespace pas

#endif  // PAS_STAGING_H_
