// include/pas/error.h

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

#ifndef PAS_ERROR_H_
#define PAS_ERROR_H_

#include <stdexcept>
#include <string>

namespace pas {

enum class Errc {
  kNotFound,
  kUnsupportedFormat,
  kCorruptHeader,
  kIoError,
  kOutOfRange,
  kDegenerateSignal,
  kEmptyCatalog,
  kTooShort,
  kWeightMismatch,
  kShapeMismatch,
  kZeroVector,
  kDimensionMismatch,
  kMissingClass,
  kRankDeficient,
  kInvalidConfig,
};

const char *errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.  The
// message is prefixed with the code name, e.g. "OutOfRange: ...".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// True for codes that originate in the filesystem rather than in the data or
// the configuration.
bool is_io_error(Errc code) noexcept;

}  // namespace pas

#endif  // PAS_ERROR_H_
