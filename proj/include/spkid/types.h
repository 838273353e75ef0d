// spkid/types.h

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

#ifndef SPKID_TYPES_H_
#define SPKID_TYPES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spkid/error.h"

namespace spkid {

// The corpus is bilingual; the two languages are only ever named A and B.
enum class Language { kA = 0, kB = 1 };

enum class Split { kTrain = 0, kTest = 1 };

// Model provenance: trained on language A, on B, or on both (combined).
enum class ModelTag { kA = 0, kB = 1, kCombined = 2 };

inline const char *LanguageName(Language lang) {
  return lang == Language::kA ? "A" : "B";
}

inline const char *SplitName(Split split) {
  return split == Split::kTrain ? "train" : "test";
}

inline const char *ModelTagName(ModelTag tag) {
  switch (tag) {
    case ModelTag::kA: return "A";
    case ModelTag::kB: return "B";
    default: return "combined";
  }
}

inline ModelTag TagFromLanguage(Language lang) {
  return lang == Language::kA ? ModelTag::kA : ModelTag::kB;
}

Language ParseLanguage(std::string_view text, const std::string &context);
Split ParseSplit(std::string_view text, const std::string &context);
ModelTag ParseModelTag(std::string_view text, const std::string &context);

// One labeled mono audio signal. Samples are dimensionless in [-1, 1].
struct Utterance {
  std::vector<double> samples;
  int sample_rate = 0;
  std::string speaker_id;
  Language language = Language::kA;
  Split split = Split::kTrain;
  std::string task_id;
};

// Ordered cepstral observation vectors for one utterance, stored row-major.
struct FeatureSequence {
  int dim = 0;
  std::vector<double> data;  // num_frames() rows of dim values each
  std::string speaker_id;
  Language language = Language::kA;
  std::string task_id;

  int num_frames() const {
    return dim == 0 ? 0 : static_cast<int>(data.size()) / dim;
  }

  std::span<const double> frame(int t) const {
    return {data.data() + static_cast<size_t>(t) * dim,
            static_cast<size_t>(dim)};
  }

  void AppendFrame(std::span<const double> values) {
    if (static_cast<int>(values.size()) != dim)
      throw DimensionError("frame dimension mismatch in AppendFrame");
    data.insert(data.end(), values.begin(), values.end());
  }
};

// Concatenates the frames of src onto dst (dimensions must agree).
void AppendFrames(FeatureSequence *dst, const FeatureSequence &src);

}  // namespace spkid

#endif  // SPKID_TYPES_H_
