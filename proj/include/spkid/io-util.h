// spkid/io-util.h

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

#ifndef SPKID_IO_UTIL_H_
#define SPKID_IO_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spkid {

// Shortest decimal string that parses back to the same double.
std::string FormatDouble(double value);

// Fixed-point formatting for human-facing tables.
std::string FormatFixed(double value, int precision);

// strtod with full-string validation; throws ParseError with context.
double ParseDouble(std::string_view text, const std::string &context);
int64_t ParseInt(std::string_view text, const std::string &context);
uint64_t ParseUint(std::string_view text, const std::string &context);

std::vector<std::string> SplitChar(std::string_view text, char sep);

// Splits into lines, accepting a trailing newline and stripping any '\r'.
std::vector<std::string> SplitLines(std::string_view text);

// Expects "key=value" with the given key; returns the value part.
std::string_view KeyedValue(std::string_view field, std::string_view key,
                            const std::string &context);

std::string ReadTextFile(const std::string &path);
void WriteTextFile(const std::string &path, std::string_view content);

std::vector<uint8_t> ReadBinaryFile(const std::string &path);
void WriteBinaryFile(const std::string &path, const std::vector<uint8_t> &bytes);

}  // namespace spkid

#endif  // SPKID_IO_UTIL_H_
