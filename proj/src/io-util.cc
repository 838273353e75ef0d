// src/io-util.cc

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

#include "spkid/io-util.h"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spkid/error.h"

namespace spkid {

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("FormatDouble: conversion failed");
  return std::string(buf, ptr);
}

std::string FormatFixed(double value, int precision) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  if (n < 0 || n >= static_cast<int>(sizeof(buf)))
    throw Error("FormatFixed: conversion failed");
  return std::string(buf, n);
}

double ParseDouble(std::string_view text, const std::string &context) {
  std::string hold(text);
  if (hold.empty())
    throw ParseError(context + ": empty field where a number was expected");
  errno = 0;
  char *end = nullptr;
  double value = std::strtod(hold.c_str(), &end);
  if (end != hold.c_str() + hold.size() || errno == ERANGE)
    throw ParseError(context + ": bad number '" + hold + "'");
  return value;
}

namespace {

template <typename Int>
Int ParseIntegral(std::string_view text, const std::string &context) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(context + ": bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

int64_t ParseInt(std::string_view text, const std::string &context) {
  return ParseIntegral<int64_t>(text, context);
}

uint64_t ParseUint(std::string_view text, const std::string &context) {
  return ParseIntegral<uint64_t>(text, context);
}

std::vector<std::string> SplitChar(std::string_view text, char sep) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(text.substr(start));
      return fields;
    }
    fields.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t pos = text.find('\n', start);
    std::string_view line = pos == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return lines;
}

std::string_view KeyedValue(std::string_view field, std::string_view key,
                            const std::string &context) {
  size_t eq = field.find('=');
  if (eq == std::string_view::npos || field.substr(0, eq) != key)
    throw ParseError(context + ": expected '" + std::string(key) +
                     "=...', got '" + std::string(field) + "'");
  return field.substr(eq + 1);
}

std::string ReadTextFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error on " + path);
  return buf.str();
}

void WriteTextFile(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write error on " + path);
}

std::vector<uint8_t> ReadBinaryFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error on " + path);
  return bytes;
}

void WriteBinaryFile(const std::string &path,
                     const std::vector<uint8_t> &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write error on " + path);
}

}  // namespace spkid
