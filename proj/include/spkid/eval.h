// spkid/eval.h

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

#ifndef SPKID_EVAL_H_
#define SPKID_EVAL_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spkid/analysis.h"
#include "spkid/types.h"
#include "spkid/version.h"
#include "spkid/vq.h"

namespace spkid {

enum class ModelKind { kVq, kVqCombined, kCm };

const char *ModelKindName(ModelKind kind);

// The per-speaker codebook training stream for a run seed. Kept public so
// separately trained model files match the harness exactly.
uint64_t CodebookSeed(uint64_t base_seed, const std::string &speaker_id,
                      Language language, int bits);

struct EvalOptions {
  AnalysisConfig analysis;  // analysis.lpc_order is the P for VQ grids
  uint64_t seed = kDefaultSeed;
  int lloyd_iterations = 0;
};

struct TrialRecord {
  std::string speaker_id;
  std::string task_id;
  std::string predicted;
  double score = 0.0;
  bool correct = false;
};

// One (model kind, P, size, train language, test language) grid cell.
struct GridCell {
  ModelKind kind = ModelKind::kVq;
  int order = 0;  // LPCC dimension P
  int size = 0;   // codebook bits for VQ, model order for CM
  Language train_language = Language::kA;  // ignored for combined cells
  Language test_language = Language::kA;
  int correct = 0;
  int total = 0;
  int regularized_models = 0;
  int clamped_frames = 0;
  bool high_order = false;
  std::vector<TrialRecord> trials;
  std::map<std::pair<std::string, std::string>, int> confusion;

  double rate() const { return total == 0 ? 0.0 : 100.0 * correct / total; }
  std::string TrainLabel() const;
  std::string PairLabel() const;  // "A-A", "A-B", ... or "A+B-A"
};

// One point of a distortion-vs-size curve. Combined books are reported at
// their component size in `bits` with the doubled count in `centroids`.
struct DistortionPoint {
  std::string curve;  // "A-A", "A-B", "B-A", "B-B", "cA", "cB"
  int order = 0;
  int bits = 0;
  int centroids = 0;
  double total = 0.0;
};

struct EvaluationReport {
  std::vector<GridCell> cells;
  std::vector<DistortionPoint> distortion_all;
  std::vector<DistortionPoint> distortion_identified;
};

// Appends the cells and curves of `extra` to `report`.
void MergeReport(EvaluationReport *report, const EvaluationReport &extra);

// The full train-language x test-language grid for VQ (sizes are codebook
// bits at P = options.analysis.lpc_order) or CM (sizes are model orders P).
// For every speaker: one model per train language from the train split, then
// every test utterance of the test language scored against all models.
// Throws ProtocolError naming the gap if the corpus lacks coverage.
EvaluationReport RunLanguageGrid(const std::vector<Utterance> &corpus,
                                 ModelKind kind, const std::vector<int> &sizes,
                                 const EvalOptions &options);

// Per speaker and size: one codebook per language, combined into a book of
// doubled size, tested separately with each language's test utterances.
EvaluationReport RunCombinedGrid(const std::vector<Utterance> &corpus,
                                 const std::vector<int> &sizes,
                                 const EvalOptions &options);

// Per-speaker VQ books (language A, language B, combined) for every size of
// the sweep. Speakers are ordered by id.
struct VqModelSweep {
  struct SpeakerBooks {
    std::string speaker_id;
    Codebook book_a;
    Codebook book_b;
    Codebook combined;
  };
  int order = 0;
  std::vector<int> sizes;
  std::vector<std::vector<SpeakerBooks>> per_size;  // [size index][speaker]
};

VqModelSweep TrainVqSweep(const std::vector<Utterance> &corpus,
                          const std::vector<int> &sizes,
                          const EvalOptions &options);

enum class AccumulationMode { kAll, kIdentified };

// Distortion accumulated over the whole corpus as a function of codebook
// size: mode kAll sums the distortion of every (test utterance, model)
// pair; kIdentified sums only the identified (minimal) model's distortion
// per test utterance. Curves: the four train-test language pairs on the
// per-language books, plus "cA"/"cB" for the combined books.
std::vector<DistortionPoint> AccumulateDistortions(
    const std::vector<Utterance> &corpus, const VqModelSweep &sweep,
    AccumulationMode mode, const EvalOptions &options);

// Both modes in one pass: (all, identified).
std::pair<std::vector<DistortionPoint>, std::vector<DistortionPoint>>
AccumulateDistortionsBothModes(const std::vector<Utterance> &corpus,
                               const VqModelSweep &sweep,
                               const EvalOptions &options);

// For each Nq in 0..7 the CM order whose parameter count (P^2+P)/2 is
// closest to the VQ count 2^Nq * p_vq, ties to the smaller order.
std::vector<std::pair<int, int>> MemoryParityPairs(int p_vq);

// Writes rates_wide.tsv, rates_long.tsv, trials.tsv, confusion.tsv and
// distortions.tsv under out_dir. An empty report yields header-only files.
void EmitReport(const EvaluationReport &report, const std::string &out_dir);

}  // namespace spkid

#endif  // SPKID_EVAL_H_
