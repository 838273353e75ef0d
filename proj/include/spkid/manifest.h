// spkid/manifest.h

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

#ifndef SPKID_MANIFEST_H_
#define SPKID_MANIFEST_H_

#include <string>
#include <vector>

#include "spkid/types.h"

namespace spkid {

// Corpus manifests are plain TSV:
//   path<TAB>speaker_id<TAB>language<TAB>split<TAB>task_id
// UTF-8, LF line endings, '#'-prefixed comment lines ignored.
struct ManifestEntry {
  std::string path;
  std::string speaker_id;
  Language language = Language::kA;
  Split split = Split::kTrain;
  std::string task_id;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

// Parses entries in file order; duplicate paths are permitted.
// Throws IoError if the file is missing, ParseError naming the line number
// if a line does not have exactly 5 tab-separated fields.
Manifest LoadManifest(const std::string &path);

void WriteManifest(const std::string &path, const Manifest &manifest);

// Entry paths are relative to the manifest's directory unless absolute.
std::string ResolveManifestPath(const std::string &manifest_path,
                                const std::string &entry_path);

}  // namespace spkid

#endif  // SPKID_MANIFEST_H_
