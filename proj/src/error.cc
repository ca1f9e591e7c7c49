// src/error.cc

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

#include "pas/error.h"

namespace pas {

const char *errc_name(Errc code) {
  switch (code) {
    case Errc::kNotFound: return "NotFound";
    case Errc::kUnsupportedFormat: return "UnsupportedFormat";
    case Errc::kCorruptHeader: return "CorruptHeader";
    case Errc::kIoError: return "IoError";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kDegenerateSignal: return "DegenerateSignal";
    case Errc::kEmptyCatalog: return "EmptyCatalog";
    case Errc::kTooShort: return "TooShort";
    case Errc::kWeightMismatch: return "WeightMismatch";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kZeroVector: return "ZeroVector";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kMissingClass: return "MissingClass";
    case Errc::kRankDeficient: return "RankDeficient";
    case Errc::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

bool is_io_error(Errc code) noexcept {
  return code == Errc::kNotFound || code == Errc::kIoError ||
         code == Errc::kCorruptHeader;
}

}  // namespace pas
