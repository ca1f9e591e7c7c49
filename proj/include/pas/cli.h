// include/pas/cli.h

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

#ifndef PAS_CLI_H_
#define PAS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Entry point of the `pas-tool` executable.  args[0] is the program name.
// Subcommands: augment, synth-testset, features, eer, pca.  Exit status is 0
// on success, 1 on a usage or validation error and 2 on an I/O error; every
// exception is converted to one of these.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv);

const char *version();

}  // namespace pas::cli

#endif  // PAS_CLI_H_
