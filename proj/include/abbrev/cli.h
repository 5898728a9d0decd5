// Copyright 2026 The abbrev Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABBREV_CLI_H_
#define ABBREV_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "abbrev/textmodel.h"

namespace abbrev {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

// Runs the command line (args excludes the program name). Reads stdin from
// `in` when no input files are given.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

// Plain text (one document, id = file name) or JSON lines with fields id,
// text and optional annotations [{start, end, type}].
std::vector<Document> ReadDocuments(const std::string& path);
std::vector<Document> ParseJsonLines(const std::string& contents,
                                     const std::string& source_name);

}  // namespace abbrev

#endif  // ABBREV_CLI_H_
