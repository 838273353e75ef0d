// src/types.cc

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

#include "spkid/types.h"

#include <string>

#include "spkid/error.h"

namespace spkid {

Language ParseLanguage(std::string_view text, const std::string &context) {
  if (text == "A" || text == "a") return Language::kA;
  if (text == "B" || text == "b") return Language::kB;
  throw ParseError(context + ": unknown language '" + std::string(text) +
                   "' (expected A or B)");
}

Split ParseSplit(std::string_view text, const std::string &context) {
  if (text == "train") return Split::kTrain;
  if (text == "test") return Split::kTest;
  throw ParseError(context + ": unknown split '" + std::string(text) +
                   "' (expected train or test)");
}

ModelTag ParseModelTag(std::string_view text, const std::string &context) {
  if (text == "A" || text == "a") return ModelTag::kA;
  if (text == "B" || text == "b") return ModelTag::kB;
  if (text == "combined") return ModelTag::kCombined;
  throw ParseError(context + ": unknown model tag '" + std::string(text) +
                   "' (expected A, B or combined)");
}

void AppendFrames(FeatureSequence *dst, const FeatureSequence &src) {
  if (dst->dim == 0 && dst->data.empty()) dst->dim = src.dim;
  if (dst->dim != src.dim)
    throw DimensionError("cannot concatenate features of dimension " +
                         std::to_string(src.dim) + " onto dimension " +
                         std::to_string(dst->dim));
  dst->data.insert(dst->data.end(), src.data.begin(), src.data.end());
}

}  // namespace spkid
