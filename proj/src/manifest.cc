// src/manifest.cc

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

#include "spkid/manifest.h"

#include <filesystem>
#include <sstream>
#include <string>

#include "spkid/error.h"
#include "spkid/io-util.h"

namespace spkid {

Manifest LoadManifest(const std::string &path) {
  std::string content = ReadTextFile(path);
  Manifest manifest;
  std::vector<std::string> lines = SplitLines(content);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    std::string context = path + ":" + std::to_string(i + 1);
    std::vector<std::string> fields = SplitChar(line, '\t');
    if (fields.size() != 5)
      throw ParseError(context + ": expected 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
    ManifestEntry entry;
    entry.path = fields[0];
    entry.speaker_id = fields[1];
    entry.language = ParseLanguage(fields[2], context);
    entry.split = ParseSplit(fields[3], context);
    entry.task_id = fields[4];
    if (entry.path.empty())
      throw ParseError(context + ": empty path field");
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

void WriteManifest(const std::string &path, const Manifest &manifest) {
  std::ostringstream out;
  for (const ManifestEntry &entry : manifest.entries) {
    out << entry.path << '\t' << entry.speaker_id << '\t'
        << LanguageName(entry.language) << '\t' << SplitName(entry.split)
        << '\t' << entry.task_id << '\n';
  }
  WriteTextFile(path, out.str());
}

std::string ResolveManifestPath(const std::string &manifest_path,
                                const std::string &entry_path) {
  std::filesystem::path entry(entry_path);
  if (entry.is_absolute()) return entry_path;
  return (std::filesystem::path(manifest_path).parent_path() / entry)
      .string();
}

}  // namespace spkid
