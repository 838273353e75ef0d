// spkid/cli-util.h

// Copyright 2026  The spkid Authors

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

#ifndef SPKID_CLI_UTIL_H_
#define SPKID_CLI_UTIL_H_

#include <string>
#include <vector>

namespace spkid {

// Parses "0,2,4" or "0..7" (or a mix, "1,4..6") into a sorted deduplicated
// list. Throws ParseError on malformed input or values outside [lo, hi].
std::vector<int> ParseIntList(const std::string &text, int lo, int hi,
                              const std::string &what);

// Parses "0.666", "2/3" or "3:1" style overlap specs into a fraction in
// [0, 1). "p/q" and "p:q" both mean p/q. Throws ParseError otherwise.
double ParseOverlap(const std::string &text);

// Creates dir (and parents) if missing; throws IoError on failure.
void EnsureDirectory(const std::string &dir);

// Key-value rows written as "key\tvalue" lines, one per entry, in order.
void WriteRunManifest(const std::string &path,
                      const std::vector<std::pair<std::string, std::string>>
                          &entries);

}  // namespace spkid

#endif  // SPKID_CLI_UTIL_H_
