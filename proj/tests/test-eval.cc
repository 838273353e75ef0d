// tests/test-eval.cc

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

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "spkid/eval.h"
#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/synth.h"

namespace {

// Two speakers, short takes: big enough to train on, small enough that the
// whole grid suite stays fast.
const std::vector<spkid::Utterance> &SmallCorpus() {
  static const std::vector<spkid::Utterance> corpus = [] {
    spkid::SynthesisSpec spec;
    spec.n_speakers = 2;
    spec.train_duration_s = 3.0;
    spec.n_test_utterances = 2;
    spec.test_duration_s = 1.0;
    spec.seed = 99;
    return spkid::GenerateSyntheticCorpus(spec);
  }();
  return corpus;
}

spkid::EvalOptions SmallOptions() {
  spkid::EvalOptions options;
  options.analysis.lpc_order = 8;
  options.seed = 99;
  return options;
}

int ConfusionTotal(const spkid::GridCell &cell) {
  int total = 0;
  for (const auto &entry : cell.confusion) total += entry.second;
  return total;
}

}  // namespace

TEST_CASE("Memory parity pairs for a 12-dimensional feature") {
  std::vector<std::pair<int, int>> expected = {
      {0, 4}, {1, 6}, {2, 9}, {3, 13}, {4, 19}, {5, 27}, {6, 39}, {7, 55}};
  CHECK(spkid::MemoryParityPairs(12) == expected);
}

TEST_CASE("Codebook seeds are stable and distinct per stream") {
  uint64_t base = spkid::CodebookSeed(42, "spk000", spkid::Language::kA, 3);
  CHECK(spkid::CodebookSeed(42, "spk000", spkid::Language::kA, 3) == base);
  CHECK(spkid::CodebookSeed(43, "spk000", spkid::Language::kA, 3) != base);
  CHECK(spkid::CodebookSeed(42, "spk001", spkid::Language::kA, 3) != base);
  CHECK(spkid::CodebookSeed(42, "spk000", spkid::Language::kB, 3) != base);
  CHECK(spkid::CodebookSeed(42, "spk000", spkid::Language::kA, 4) != base);
}

TEST_CASE("Quantizer grid covers every language pair at every size") {
  auto report = spkid::RunLanguageGrid(SmallCorpus(), spkid::ModelKind::kVq,
                                       {0, 1}, SmallOptions());
  CHECK(report.cells.size() == 8);  // 2 sizes x 2 train x 2 test languages
  std::set<std::string> pairs;
  for (const auto &cell : report.cells) {
    CHECK(cell.kind == spkid::ModelKind::kVq);
    CHECK(cell.order == 8);
    CHECK((cell.size == 0 || cell.size == 1));
    CHECK(cell.total == 4);  // 2 speakers x 2 test utterances
    CHECK(cell.correct >= 0);
    CHECK(cell.correct <= cell.total);
    CHECK(static_cast<int>(cell.trials.size()) == cell.total);
    CHECK(ConfusionTotal(cell) == cell.total);
    CHECK_FALSE(cell.high_order);
    pairs.insert(cell.PairLabel());
  }
  CHECK(pairs == std::set<std::string>{"A-A", "A-B", "B-A", "B-B"});

  int correct_from_trials = 0;
  for (const auto &trial : report.cells[0].trials)
    correct_from_trials += trial.correct ? 1 : 0;
  CHECK(correct_from_trials == report.cells[0].correct);
}

TEST_CASE("Covariance grid uses the size as the model order") {
  auto report = spkid::RunLanguageGrid(SmallCorpus(), spkid::ModelKind::kCm,
                                       {2, 3}, SmallOptions());
  CHECK(report.cells.size() == 8);
  for (const auto &cell : report.cells) {
    CHECK(cell.kind == spkid::ModelKind::kCm);
    CHECK(cell.order == cell.size);
    CHECK(cell.total == 4);
  }
}

TEST_CASE("Combined grid tests each language against one bilingual book") {
  auto report =
      spkid::RunCombinedGrid(SmallCorpus(), {0, 1}, SmallOptions());
  CHECK(report.cells.size() == 4);  // 2 sizes x 2 test languages
  std::set<std::string> pairs;
  for (const auto &cell : report.cells) {
    CHECK(cell.kind == spkid::ModelKind::kVqCombined);
    CHECK(cell.TrainLabel() == "A+B");
    CHECK(cell.total == 4);
    pairs.insert(cell.PairLabel());
  }
  CHECK(pairs == std::set<std::string>{"A+B-A", "A+B-B"});
}

TEST_CASE("A speaker without training coverage is a protocol error") {
  std::vector<spkid::Utterance> gappy = SmallCorpus();
  gappy.erase(std::remove_if(gappy.begin(), gappy.end(),
                             [](const spkid::Utterance &utt) {
                               return utt.speaker_id == "spk001" &&
                                      utt.language == spkid::Language::kB &&
                                      utt.split == spkid::Split::kTrain;
                             }),
              gappy.end());
  CHECK_THROWS_AS(spkid::RunLanguageGrid(gappy, spkid::ModelKind::kVq, {0},
                                         SmallOptions()),
                  spkid::ProtocolError);
}

TEST_CASE("Distortion sweep trains all three books per speaker and size") {
  auto sweep = spkid::TrainVqSweep(SmallCorpus(), {1, 2}, SmallOptions());
  CHECK(sweep.order == 8);
  CHECK(sweep.sizes == std::vector<int>{1, 2});
  REQUIRE(sweep.per_size.size() == 2);
  for (size_t s = 0; s < sweep.per_size.size(); ++s) {
    REQUIRE(sweep.per_size[s].size() == 2);
    CHECK(sweep.per_size[s][0].speaker_id == "spk000");
    CHECK(sweep.per_size[s][1].speaker_id == "spk001");
    for (const auto &books : sweep.per_size[s]) {
      int bits = sweep.sizes[s];
      CHECK(books.book_a.count() == (1 << bits));
      CHECK(books.book_b.count() == (1 << bits));
      CHECK(books.combined.count() == (2 << bits));
      CHECK(books.combined.tag == spkid::ModelTag::kCombined);
    }
  }
}

TEST_CASE("Accumulated distortion never drops below the identified mode") {
  auto sweep = spkid::TrainVqSweep(SmallCorpus(), {1, 2}, SmallOptions());
  auto [all, identified] =
      spkid::AccumulateDistortionsBothModes(SmallCorpus(), sweep,
                                            SmallOptions());
  CHECK(all.size() == 12);  // 6 curves x 2 sizes
  CHECK(identified.size() == all.size());

  std::set<std::string> curves;
  std::map<std::pair<std::string, int>, double> identified_totals;
  for (const auto &point : identified)
    identified_totals[{point.curve, point.bits}] = point.total;
  for (const auto &point : all) {
    curves.insert(point.curve);
    CHECK(point.total > 0.0);
    int expected_centroids =
        (point.curve[0] == 'c') ? (2 << point.bits) : (1 << point.bits);
    CHECK(point.centroids == expected_centroids);
    CHECK(point.total >=
          identified_totals.at({point.curve, point.bits}) - 1e-9);
  }
  CHECK(curves ==
        std::set<std::string>{"A-A", "A-B", "B-A", "B-B", "cA", "cB"});
}

TEST_CASE("Report files are written once per table and deterministically") {
  auto report = spkid::RunLanguageGrid(SmallCorpus(), spkid::ModelKind::kVq,
                                       {0}, SmallOptions());
  auto base = std::filesystem::temp_directory_path() / "spkid-test" / "eval";
  std::filesystem::remove_all(base);
  const char *names[] = {"rates_wide.tsv", "rates_long.tsv", "trials.tsv",
                         "confusion.tsv", "distortions.tsv"};
  spkid::EmitReport(report, (base / "one").string());
  spkid::EmitReport(report, (base / "two").string());
  for (const char *name : names) {
    CAPTURE(name);
    REQUIRE(std::filesystem::exists(base / "one" / name));
    CHECK(spkid::ReadTextFile((base / "one" / name).string()) ==
          spkid::ReadTextFile((base / "two" / name).string()));
  }

  // An empty report still yields the headers, so downstream joins never
  // break on a missing file.
  spkid::EmitReport(spkid::EvaluationReport{}, (base / "empty").string());
  for (const char *name : names) {
    CAPTURE(name);
    std::string text = spkid::ReadTextFile((base / "empty" / name).string());
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  }
}

TEST_CASE("Merging reports concatenates cells and curves") {
  auto vq = spkid::RunLanguageGrid(SmallCorpus(), spkid::ModelKind::kVq, {0},
                                   SmallOptions());
  auto combined = spkid::RunCombinedGrid(SmallCorpus(), {0}, SmallOptions());
  size_t cells_before = vq.cells.size();
  spkid::MergeReport(&vq, combined);
  CHECK(vq.cells.size() == cells_before + combined.cells.size());
}
