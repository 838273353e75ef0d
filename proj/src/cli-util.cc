// src/cli-util.cc

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

#include "spkid/cli-util.h"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "spkid/error.h"
#include "spkid/io-util.h"

namespace spkid {

std::vector<int> ParseIntList(const std::string &text, int lo, int hi,
                              const std::string &what) {
  std::vector<int> values;
  auto check = [&](int64_t value) {
    if (value < lo || value > hi)
      throw ParseError(what + ": value " + std::to_string(value) +
                       " outside " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    values.push_back(static_cast<int>(value));
  };
  for (const std::string &piece : SplitChar(text, ',')) {
    size_t dots = piece.find("..");
    if (dots == std::string::npos) {
      check(ParseInt(piece, what));
    } else {
      int64_t first = ParseInt(piece.substr(0, dots), what);
      int64_t last = ParseInt(piece.substr(dots + 2), what);
      if (last < first)
        throw ParseError(what + ": descending range '" + piece + "'");
      for (int64_t v = first; v <= last; ++v) check(v);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw ParseError(what + ": empty list");
  return values;
}

double ParseOverlap(const std::string &text) {
  size_t sep = text.find_first_of("/:");
  double value;
  if (sep == std::string::npos) {
    value = ParseDouble(text, "overlap");
  } else {
    double num = ParseDouble(text.substr(0, sep), "overlap");
    double den = ParseDouble(text.substr(sep + 1), "overlap");
    if (den == 0.0) throw ParseError("overlap: zero denominator");
    value = num / den;
  }
  if (value < 0.0 || value >= 1.0)
    throw ParseError("overlap must be in [0, 1), got '" + text + "'");
  return value;
}

void EnsureDirectory(const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir);
}

void WriteRunManifest(const std::string &path,
                      const std::vector<std::pair<std::string, std::string>>
                          &entries) {
  std::ostringstream out;
  for (const auto &[key, value] : entries)
    out << key << '\t' << value << '\n';
  WriteTextFile(path, out.str());
}

}  // namespace spkid
