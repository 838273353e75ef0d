// spkid/version.h

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

#ifndef SPKID_VERSION_H_
#define SPKID_VERSION_H_

#include <cstdint>

namespace spkid {

inline constexpr const char *kVersion = "0.1.0";

// Format tags written in the first line of model files.
inline constexpr const char *kCodebookFormat = "vqcb v1";
inline constexpr const char *kCovarianceFormat = "cmmodel v1";

// Seed used when the caller does not pick one.
inline constexpr uint64_t kDefaultSeed = 42;

}  // namespace spkid

#endif  // SPKID_VERSION_H_
