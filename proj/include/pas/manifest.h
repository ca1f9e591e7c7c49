// include/pas/manifest.h

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

#ifndef PAS_MANIFEST_H_
#define PAS_MANIFEST_H_

#include <filesystem>
#include <vector>

namespace pas {

// UTF-8 text, one path per line.  Blank lines and lines starting with '#' are
// skipped; surrounding whitespace is trimmed.  Paths are used as written.
std::vector<std::filesystem::path> read_manifest(const std::filesystem::path &path);

// Every regular "*.wav" file directly inside `dir`, sorted by name.
std::vector<std::filesystem::path> list_wav_files(const std::filesystem::path &dir);

}  // namespace pas

#endif  // PAS_MANIFEST_H_
