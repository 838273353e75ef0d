// spkid/wav.h

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

#ifndef SPKID_WAV_H_
#define SPKID_WAV_H_

#include <span>
#include <string>
#include <vector>

namespace spkid {

struct WavData {
  std::vector<double> samples;  // scaled to [-1, 1) by dividing by 32768
  int sample_rate = 0;
};

// Reads a RIFF/WAVE file. Only PCM, 16-bit, mono is accepted; anything else
// raises UnsupportedFormatError. A data chunk that extends past the end of
// the file raises IoError.
WavData ReadWav(const std::string &path);

// Writes PCM 16-bit mono little-endian. Samples are clamped to [-1, 1].
void WriteWav(const std::string &path, std::span<const double> samples,
              int sample_rate);

}  // namespace spkid

#endif  // SPKID_WAV_H_
