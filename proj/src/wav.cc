// src/wav.cc

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

#include "spkid/wav.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include "spkid/error.h"
#include "spkid/io-util.h"

namespace spkid {

namespace {

uint32_t ReadU32(const std::vector<uint8_t> &bytes, size_t offset) {
  return static_cast<uint32_t>(bytes[offset]) |
         static_cast<uint32_t>(bytes[offset + 1]) << 8 |
         static_cast<uint32_t>(bytes[offset + 2]) << 16 |
         static_cast<uint32_t>(bytes[offset + 3]) << 24;
}

uint16_t ReadU16(const std::vector<uint8_t> &bytes, size_t offset) {
  return static_cast<uint16_t>(bytes[offset] | bytes[offset + 1] << 8);
}

void PutU32(std::vector<uint8_t> *bytes, uint32_t value) {
  bytes->push_back(static_cast<uint8_t>(value & 0xff));
  bytes->push_back(static_cast<uint8_t>(value >> 8 & 0xff));
  bytes->push_back(static_cast<uint8_t>(value >> 16 & 0xff));
  bytes->push_back(static_cast<uint8_t>(value >> 24 & 0xff));
}

void PutU16(std::vector<uint8_t> *bytes, uint16_t value) {
  bytes->push_back(static_cast<uint8_t>(value & 0xff));
  bytes->push_back(static_cast<uint8_t>(value >> 8 & 0xff));
}

void PutTag(std::vector<uint8_t> *bytes, const char *tag) {
  bytes->insert(bytes->end(), tag, tag + 4);
}

bool TagIs(const std::vector<uint8_t> &bytes, size_t offset,
           const char *tag) {
  return std::memcmp(bytes.data() + offset, tag, 4) == 0;
}

}  // namespace

WavData ReadWav(const std::string &path) {
  std::vector<uint8_t> bytes = ReadBinaryFile(path);
  if (bytes.size() < 12 || !TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE"))
    throw UnsupportedFormatError(path + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  uint16_t audio_format = 0, num_channels = 0, bits_per_sample = 0;
  uint32_t sample_rate = 0;
  size_t data_offset = 0, data_size = 0;
  bool have_data = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    uint32_t chunk_size = ReadU32(bytes, pos + 4);
    size_t body = pos + 8;
    if (TagIs(bytes, pos, "fmt ")) {
      if (body + 16 > bytes.size() || chunk_size < 16)
        throw ParseError(path + ": malformed fmt chunk");
      audio_format = ReadU16(bytes, body);
      num_channels = ReadU16(bytes, body + 2);
      sample_rate = ReadU32(bytes, body + 4);
      bits_per_sample = ReadU16(bytes, body + 14);
      have_fmt = true;
    } else if (TagIs(bytes, pos, "data")) {
      data_offset = body;
      data_size = chunk_size;
      have_data = true;
      if (data_offset + data_size > bytes.size())
        throw IoError(path + ": data chunk extends past end of file");
    }
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) throw ParseError(path + ": missing fmt chunk");
  if (!have_data) throw ParseError(path + ": missing data chunk");
  if (audio_format != 1)
    throw UnsupportedFormatError(path + ": only PCM encoding is supported");
  if (num_channels != 1)
    throw UnsupportedFormatError(path + ": only mono audio is supported");
  if (bits_per_sample != 16)
    throw UnsupportedFormatError(path + ": only 16-bit samples are supported");
  if (sample_rate == 0) throw ParseError(path + ": zero sample rate");

  WavData wav;
  wav.sample_rate = static_cast<int>(sample_rate);
  size_t count = data_size / 2;
  wav.samples.resize(count);
  for (size_t i = 0; i < count; ++i) {
    uint16_t raw = ReadU16(bytes, data_offset + 2 * i);
    wav.samples[i] = static_cast<int16_t>(raw) / 32768.0;
  }
  return wav;
}

void WriteWav(const std::string &path, std::span<const double> samples,
              int sample_rate) {
  if (sample_rate <= 0)
    throw UsageError("WriteWav: sample rate must be positive");
  uint32_t data_size = static_cast<uint32_t>(samples.size() * 2);
  std::vector<uint8_t> bytes;
  bytes.reserve(44 + data_size);
  PutTag(&bytes, "RIFF");
  PutU32(&bytes, 36 + data_size);
  PutTag(&bytes, "WAVE");
  PutTag(&bytes, "fmt ");
  PutU32(&bytes, 16);
  PutU16(&bytes, 1);
  PutU16(&bytes, 1);
  PutU32(&bytes, static_cast<uint32_t>(sample_rate));
  PutU32(&bytes, static_cast<uint32_t>(sample_rate) * 2);
  PutU16(&bytes, 2);
  PutU16(&bytes, 16);
  PutTag(&bytes, "data");
  PutU32(&bytes, data_size);
  for (double v : samples) {
    double scaled = std::lrint(v * 32768.0);
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    PutU16(&bytes, static_cast<uint16_t>(static_cast<int16_t>(scaled)));
  }
  WriteBinaryFile(path, bytes);
}

}  // namespace spkid
