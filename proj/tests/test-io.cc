// tests/test-io.cc

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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "spkid/cli-util.h"
#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/manifest.h"
#include "spkid/wav.h"

namespace {

std::string TempDir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / "spkid-test" / name;
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("FormatDouble round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 1234567.875, 0.0, -1.0}) {
    CHECK(spkid::ParseDouble(spkid::FormatDouble(v), "test") == v);
  }
}

TEST_CASE("ParseDouble rejects trailing garbage") {
  CHECK_THROWS_AS(spkid::ParseDouble("1.5x", "test"), spkid::ParseError);
  CHECK_THROWS_AS(spkid::ParseDouble("", "test"), spkid::ParseError);
}

TEST_CASE("ParseIntList accepts lists, ranges, and mixtures") {
  CHECK(spkid::ParseIntList("0,2,4", 0, 10, "x") ==
        std::vector<int>{0, 2, 4});
  CHECK(spkid::ParseIntList("0..3", 0, 10, "x") ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(spkid::ParseIntList("5,1..3,5", 0, 10, "x") ==
        std::vector<int>{1, 2, 3, 5});
}

TEST_CASE("ParseIntList rejects bad input") {
  CHECK_THROWS_AS(spkid::ParseIntList("3..1", 0, 10, "x"), spkid::ParseError);
  CHECK_THROWS_AS(spkid::ParseIntList("11", 0, 10, "x"), spkid::ParseError);
  CHECK_THROWS_AS(spkid::ParseIntList("", 0, 10, "x"), spkid::ParseError);
  CHECK_THROWS_AS(spkid::ParseIntList("a", 0, 10, "x"), spkid::ParseError);
}

TEST_CASE("ParseOverlap accepts decimals, fractions, and ratios") {
  CHECK(spkid::ParseOverlap("0.5") == 0.5);
  CHECK(spkid::ParseOverlap("2/3") == doctest::Approx(2.0 / 3.0));
  CHECK(spkid::ParseOverlap("3:4") == doctest::Approx(0.75));
  CHECK_THROWS_AS(spkid::ParseOverlap("1.0"), spkid::ParseError);
  CHECK_THROWS_AS(spkid::ParseOverlap("1/0"), spkid::ParseError);
}

TEST_CASE("Manifest round-trip preserves fields and order") {
  std::string dir = TempDir("manifest");
  spkid::Manifest manifest;
  spkid::ManifestEntry entry;
  entry.path = "a.wav";
  entry.speaker_id = "spk000";
  entry.language = spkid::Language::kB;
  entry.split = spkid::Split::kTest;
  entry.task_id = "s1";
  manifest.entries.push_back(entry);
  entry.path = "b.wav";
  entry.split = spkid::Split::kTrain;
  entry.task_id = "train";
  manifest.entries.push_back(entry);

  std::string path = dir + "/m.tsv";
  spkid::WriteManifest(path, manifest);
  spkid::Manifest loaded = spkid::LoadManifest(path);
  REQUIRE(loaded.entries.size() == 2);
  CHECK(loaded.entries[0].path == "a.wav");
  CHECK(loaded.entries[0].language == spkid::Language::kB);
  CHECK(loaded.entries[0].split == spkid::Split::kTest);
  CHECK(loaded.entries[1].task_id == "train");
}

TEST_CASE("Manifest skips comments and flags bad arity with line number") {
  std::string dir = TempDir("manifest");
  std::string path = dir + "/bad.tsv";
  spkid::WriteTextFile(path,
                       "# comment\n"
                       "a.wav\tspk\tA\ttrain\tt\n"
                       "short\tline\n");
  try {
    spkid::LoadManifest(path);
    FAIL("expected ParseError");
  } catch (const spkid::ParseError &e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  CHECK_THROWS_AS(spkid::LoadManifest(dir + "/missing.tsv"), spkid::IoError);
}

TEST_CASE("ResolveManifestPath keeps absolute paths and anchors relative") {
  CHECK(spkid::ResolveManifestPath("/data/m.tsv", "/abs/x.wav") ==
        "/abs/x.wav");
  CHECK(spkid::ResolveManifestPath("/data/m.tsv", "x.wav") == "/data/x.wav");
}

TEST_CASE("WAV round-trip preserves length, rate, and quantized samples") {
  std::string dir = TempDir("wav");
  std::vector<double> samples{0.5, -0.25, 0.0, 0.9, -1.0};
  std::string path = dir + "/t.wav";
  spkid::WriteWav(path, samples, 8000);
  spkid::WavData wav = spkid::ReadWav(path);
  CHECK(wav.sample_rate == 8000);
  REQUIRE(wav.samples.size() == samples.size());
  CHECK(wav.samples[0] == 0.5);
  for (size_t i = 0; i < samples.size(); ++i)
    CHECK(wav.samples[i] == doctest::Approx(samples[i]).epsilon(1e-4));
}

TEST_CASE("WAV reader rejects unsupported payloads") {
  std::string dir = TempDir("wav");

  std::string not_riff = dir + "/x.wav";
  spkid::WriteTextFile(not_riff, "this is not audio at all, not even close");
  CHECK_THROWS_AS(spkid::ReadWav(not_riff), spkid::UnsupportedFormatError);

  std::string good = dir + "/good.wav";
  spkid::WriteWav(good, std::vector<double>{0.1, 0.2}, 8000);
  std::vector<uint8_t> bytes = spkid::ReadBinaryFile(good);

  std::vector<uint8_t> stereo = bytes;
  stereo[22] = 2;  // channel count in fmt
  std::string stereo_path = dir + "/stereo.wav";
  spkid::WriteBinaryFile(stereo_path, stereo);
  CHECK_THROWS_AS(spkid::ReadWav(stereo_path),
                  spkid::UnsupportedFormatError);

  std::vector<uint8_t> eight = bytes;
  eight[34] = 8;  // bits per sample
  std::string eight_path = dir + "/eight.wav";
  spkid::WriteBinaryFile(eight_path, eight);
  CHECK_THROWS_AS(spkid::ReadWav(eight_path), spkid::UnsupportedFormatError);

  std::vector<uint8_t> truncated(bytes.begin(), bytes.end() - 2);
  std::string trunc_path = dir + "/trunc.wav";
  spkid::WriteBinaryFile(trunc_path, truncated);
  CHECK_THROWS_AS(spkid::ReadWav(trunc_path), spkid::IoError);
}
