// src/eval.cc

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

#include "spkid/eval.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

#include "spkid/cm.h"
#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/rng.h"

namespace spkid {

const char *ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kVq: return "vq";
    case ModelKind::kVqCombined: return "combined";
    default: return "cm";
  }
}

std::string GridCell::TrainLabel() const {
  return kind == ModelKind::kVqCombined ? "A+B"
                                        : LanguageName(train_language);
}

std::string GridCell::PairLabel() const {
  return TrainLabel() + "-" + LanguageName(test_language);
}

uint64_t CodebookSeed(uint64_t base_seed, const std::string &speaker_id,
                      Language language, int bits) {
  return MixSeed(MixSeed(base_seed, kSaltCodebook, HashString(speaker_id),
                         static_cast<uint64_t>(language)),
                 static_cast<uint64_t>(bits));
}

void MergeReport(EvaluationReport *report, const EvaluationReport &extra) {
  report->cells.insert(report->cells.end(), extra.cells.begin(),
                       extra.cells.end());
  report->distortion_all.insert(report->distortion_all.end(),
                                extra.distortion_all.begin(),
                                extra.distortion_all.end());
  report->distortion_identified.insert(report->distortion_identified.end(),
                                       extra.distortion_identified.begin(),
                                       extra.distortion_identified.end());
}

namespace {

constexpr std::array<Language, 2> kLanguages = {Language::kA, Language::kB};

int LangIndex(Language lang) { return static_cast<int>(lang); }

struct SpeakerLangData {
  FeatureSequence train;
  std::vector<FeatureSequence> tests;
};

struct CorpusFeatures {
  std::vector<std::string> speakers;  // sorted ids
  std::vector<std::array<SpeakerLangData, 2>> data;
  int clamped_frames = 0;
  bool high_order = false;
};

CorpusFeatures ExtractAll(const std::vector<Utterance> &corpus,
                          const AnalysisConfig &config) {
  config.Validate();
  if (corpus.empty()) throw ProtocolError("the corpus has no utterances");
  CorpusFeatures out;
  std::map<std::string, size_t> index;
  for (const Utterance &utt : corpus) index.emplace(utt.speaker_id, 0);
  for (auto &entry : index) {
    entry.second = out.speakers.size();
    out.speakers.push_back(entry.first);
  }
  out.data.resize(out.speakers.size());
  for (size_t s = 0; s < out.speakers.size(); ++s) {
    for (Language lang : kLanguages) {
      FeatureSequence &train = out.data[s][LangIndex(lang)].train;
      train.dim = config.lpc_order;
      train.speaker_id = out.speakers[s];
      train.language = lang;
      train.task_id = "train";
    }
  }
  for (const Utterance &utt : corpus) {
    ExtractStats stats;
    FeatureSequence features = ExtractFeatures(utt, config, &stats);
    out.clamped_frames += stats.clamped_frames;
    SpeakerLangData &slot =
        out.data[index[utt.speaker_id]][LangIndex(utt.language)];
    if (utt.split == Split::kTrain) {
      AppendFrames(&slot.train, features);
    } else {
      slot.tests.push_back(std::move(features));
    }
  }
  for (size_t s = 0; s < out.speakers.size(); ++s) {
    for (Language lang : kLanguages) {
      const SpeakerLangData &slot = out.data[s][LangIndex(lang)];
      if (slot.train.num_frames() == 0)
        throw ProtocolError("speaker " + out.speakers[s] +
                            " has no train data in language " +
                            LanguageName(lang));
      if (slot.tests.empty())
        throw ProtocolError("speaker " + out.speakers[s] +
                            " has no test utterance in language " +
                            LanguageName(lang));
    }
  }
  out.high_order = config.HighOrder();
  return out;
}

double BestScore(const std::vector<std::pair<std::string, double>> &scores) {
  double best = scores.front().second;
  for (const auto &entry : scores) best = std::min(best, entry.second);
  return best;
}

void RecordTrial(GridCell *cell, const std::string &speaker_id,
                 const std::string &task_id, const std::string &predicted,
                 double score) {
  TrialRecord trial;
  trial.speaker_id = speaker_id;
  trial.task_id = task_id;
  trial.predicted = predicted;
  trial.score = score;
  trial.correct = predicted == speaker_id;
  ++cell->total;
  if (trial.correct) ++cell->correct;
  ++cell->confusion[{speaker_id, predicted}];
  cell->trials.push_back(std::move(trial));
}

std::array<std::vector<Codebook>, 2> TrainBooksAtSize(
    const CorpusFeatures &corpus, int bits, const EvalOptions &options) {
  std::array<std::vector<Codebook>, 2> books;
  for (size_t s = 0; s < corpus.speakers.size(); ++s) {
    for (Language lang : kLanguages) {
      int li = LangIndex(lang);
      books[li].push_back(TrainCodebookRandom(
          corpus.data[s][li].train, bits,
          CodebookSeed(options.seed, corpus.speakers[s], lang, bits),
          options.lloyd_iterations));
    }
  }
  return books;
}

EvaluationReport VqGrid(const CorpusFeatures &corpus,
                        const std::vector<int> &sizes,
                        const EvalOptions &options) {
  EvaluationReport report;
  for (int bits : sizes) {
    std::array<std::vector<Codebook>, 2> books =
        TrainBooksAtSize(corpus, bits, options);
    for (Language train_lang : kLanguages) {
      for (Language test_lang : kLanguages) {
        GridCell cell;
        cell.kind = ModelKind::kVq;
        cell.order = options.analysis.lpc_order;
        cell.size = bits;
        cell.train_language = train_lang;
        cell.test_language = test_lang;
        cell.clamped_frames = corpus.clamped_frames;
        cell.high_order = corpus.high_order;
        for (size_t s = 0; s < corpus.speakers.size(); ++s) {
          for (const FeatureSequence &test :
               corpus.data[s][LangIndex(test_lang)].tests) {
            VqIdentifyResult result =
                IdentifyVq(books[LangIndex(train_lang)], test);
            RecordTrial(&cell, corpus.speakers[s], test.task_id,
                        result.speaker_id, BestScore(result.scores));
          }
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

EvaluationReport CombinedGrid(const CorpusFeatures &corpus,
                              const std::vector<int> &sizes,
                              const EvalOptions &options) {
  EvaluationReport report;
  for (int bits : sizes) {
    std::array<std::vector<Codebook>, 2> books =
        TrainBooksAtSize(corpus, bits, options);
    std::vector<Codebook> combined;
    combined.reserve(corpus.speakers.size());
    for (size_t s = 0; s < corpus.speakers.size(); ++s)
      combined.push_back(CombineCodebooks(books[0][s], books[1][s]));
    for (Language test_lang : kLanguages) {
      GridCell cell;
      cell.kind = ModelKind::kVqCombined;
      cell.order = options.analysis.lpc_order;
      cell.size = bits;
      cell.test_language = test_lang;
      cell.clamped_frames = corpus.clamped_frames;
      cell.high_order = corpus.high_order;
      for (size_t s = 0; s < corpus.speakers.size(); ++s) {
        for (const FeatureSequence &test :
             corpus.data[s][LangIndex(test_lang)].tests) {
          VqIdentifyResult result = IdentifyVq(combined, test);
          RecordTrial(&cell, corpus.speakers[s], test.task_id,
                      result.speaker_id, BestScore(result.scores));
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

EvaluationReport CmGrid(const std::vector<Utterance> &utterances,
                        const std::vector<int> &sizes,
                        const EvalOptions &options) {
  EvaluationReport report;
  for (int order : sizes) {
    AnalysisConfig config = options.analysis;
    config.lpc_order = order;
    CorpusFeatures corpus = ExtractAll(utterances, config);

    std::array<std::vector<CovarianceModel>, 2> models;
    struct TestCov {
      SquareMatrix cov;
      std::string task_id;
      bool regularized = false;
    };
    std::vector<std::array<std::vector<TestCov>, 2>> tests(
        corpus.speakers.size());
    for (size_t s = 0; s < corpus.speakers.size(); ++s) {
      for (Language lang : kLanguages) {
        int li = LangIndex(lang);
        models[li].push_back(EstimateCovariance(corpus.data[s][li].train));
        for (const FeatureSequence &features : corpus.data[s][li].tests) {
          CovarianceModel test_model = EstimateCovariance(features);
          tests[s][li].push_back({std::move(test_model.cov),
                                  features.task_id, test_model.regularized});
        }
      }
    }

    for (Language train_lang : kLanguages) {
      for (Language test_lang : kLanguages) {
        GridCell cell;
        cell.kind = ModelKind::kCm;
        cell.order = order;
        cell.size = order;
        cell.train_language = train_lang;
        cell.test_language = test_lang;
        cell.clamped_frames = corpus.clamped_frames;
        cell.high_order = corpus.high_order;
        for (const CovarianceModel &model : models[LangIndex(train_lang)])
          if (model.regularized) ++cell.regularized_models;
        for (size_t s = 0; s < corpus.speakers.size(); ++s) {
          for (const TestCov &test : tests[s][LangIndex(test_lang)]) {
            if (test.regularized) ++cell.regularized_models;
            CmIdentifyResult result =
                IdentifyCm(models[LangIndex(train_lang)], test.cov);
            RecordTrial(&cell, corpus.speakers[s], test.task_id,
                        result.speaker_id, BestScore(result.scores));
          }
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

}  // namespace

EvaluationReport RunLanguageGrid(const std::vector<Utterance> &corpus,
                                 ModelKind kind, const std::vector<int> &sizes,
                                 const EvalOptions &options) {
  if (sizes.empty()) throw UsageError("evaluation needs at least one size");
  if (kind == ModelKind::kVqCombined)
    return RunCombinedGrid(corpus, sizes, options);
  if (kind == ModelKind::kCm) return CmGrid(corpus, sizes, options);
  CorpusFeatures features = ExtractAll(corpus, options.analysis);
  return VqGrid(features, sizes, options);
}

EvaluationReport RunCombinedGrid(const std::vector<Utterance> &corpus,
                                 const std::vector<int> &sizes,
                                 const EvalOptions &options) {
  if (sizes.empty()) throw UsageError("evaluation needs at least one size");
  CorpusFeatures features = ExtractAll(corpus, options.analysis);
  return CombinedGrid(features, sizes, options);
}

VqModelSweep TrainVqSweep(const std::vector<Utterance> &corpus,
                          const std::vector<int> &sizes,
                          const EvalOptions &options) {
  if (sizes.empty()) throw UsageError("sweep needs at least one size");
  CorpusFeatures features = ExtractAll(corpus, options.analysis);
  VqModelSweep sweep;
  sweep.order = options.analysis.lpc_order;
  sweep.sizes = sizes;
  sweep.per_size.resize(sizes.size());
  for (size_t k = 0; k < sizes.size(); ++k) {
    std::array<std::vector<Codebook>, 2> books =
        TrainBooksAtSize(features, sizes[k], options);
    for (size_t s = 0; s < features.speakers.size(); ++s) {
      VqModelSweep::SpeakerBooks entry;
      entry.speaker_id = features.speakers[s];
      entry.book_a = std::move(books[0][s]);
      entry.book_b = std::move(books[1][s]);
      entry.combined = CombineCodebooks(entry.book_a, entry.book_b);
      sweep.per_size[k].push_back(std::move(entry));
    }
  }
  return sweep;
}

std::pair<std::vector<DistortionPoint>, std::vector<DistortionPoint>>
AccumulateDistortionsBothModes(const std::vector<Utterance> &corpus,
                               const VqModelSweep &sweep,
                               const EvalOptions &options) {
  if (sweep.sizes.empty() || sweep.per_size.empty())
    throw UsageError("distortion sweep has no trained models");
  if (sweep.order != options.analysis.lpc_order)
    throw DimensionError("sweep was trained at a different analysis order");
  CorpusFeatures features = ExtractAll(corpus, options.analysis);
  if (features.speakers.size() != sweep.per_size[0].size())
    throw ProtocolError("sweep speaker count does not match the corpus");

  std::vector<DistortionPoint> all, identified;
  auto accumulate = [&](const std::string &curve, int test_lang,
                        size_t size_index, auto book_of) {
    DistortionPoint point_all, point_min;
    point_all.curve = curve;
    point_all.order = sweep.order;
    point_all.bits = sweep.sizes[size_index];
    point_all.centroids = book_of(sweep.per_size[size_index][0]).count();
    point_min = point_all;
    for (size_t s = 0; s < features.speakers.size(); ++s) {
      for (const FeatureSequence &test : features.data[s][test_lang].tests) {
        double min_distortion = 0.0;
        bool first = true;
        for (const VqModelSweep::SpeakerBooks &entry :
             sweep.per_size[size_index]) {
          double d = QuantizeDistortion(test, book_of(entry));
          point_all.total += d;
          if (first || d < min_distortion) {
            min_distortion = d;
            first = false;
          }
        }
        point_min.total += min_distortion;
      }
    }
    all.push_back(point_all);
    identified.push_back(point_min);
  };

  for (Language train_lang : kLanguages) {
    for (Language test_lang : kLanguages) {
      std::string curve = std::string(LanguageName(train_lang)) + "-" +
                          LanguageName(test_lang);
      for (size_t k = 0; k < sweep.sizes.size(); ++k) {
        if (train_lang == Language::kA) {
          accumulate(curve, LangIndex(test_lang), k,
                     [](const VqModelSweep::SpeakerBooks &entry)
                         -> const Codebook & { return entry.book_a; });
        } else {
          accumulate(curve, LangIndex(test_lang), k,
                     [](const VqModelSweep::SpeakerBooks &entry)
                         -> const Codebook & { return entry.book_b; });
        }
      }
    }
  }
  for (Language test_lang : kLanguages) {
    std::string curve = std::string("c") + LanguageName(test_lang);
    for (size_t k = 0; k < sweep.sizes.size(); ++k) {
      accumulate(curve, LangIndex(test_lang), k,
                 [](const VqModelSweep::SpeakerBooks &entry)
                     -> const Codebook & { return entry.combined; });
    }
  }
  return {std::move(all), std::move(identified)};
}

std::vector<DistortionPoint> AccumulateDistortions(
    const std::vector<Utterance> &corpus, const VqModelSweep &sweep,
    AccumulationMode mode, const EvalOptions &options) {
  auto both = AccumulateDistortionsBothModes(corpus, sweep, options);
  return mode == AccumulationMode::kAll ? std::move(both.first)
                                        : std::move(both.second);
}

std::vector<std::pair<int, int>> MemoryParityPairs(int p_vq) {
  if (p_vq < 1) throw UsageError("parity needs a positive dimension");
  std::vector<std::pair<int, int>> pairs;
  for (int nq = 0; nq <= 7; ++nq) {
    int64_t target = (int64_t{1} << nq) * p_vq;
    int best_p = 1;
    int64_t best_gap = std::llabs(CountCmParameters(1) - target);
    for (int p = 2; p <= 200; ++p) {
      int64_t gap = std::llabs(CountCmParameters(p) - target);
      if (gap < best_gap) {
        best_gap = gap;
        best_p = p;
      }
    }
    pairs.emplace_back(nq, best_p);
  }
  return pairs;
}

void EmitReport(const EvaluationReport &report, const std::string &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir);
  auto path = [&](const char *name) {
    return (std::filesystem::path(out_dir) / name).string();
  };

  // Wide table, one row per (kind, order, language pair), one column per
  // size, with the flat order column collapsed for covariance rows where
  // the size already is the order.
  struct RowKey {
    int kind;
    int order;
    int train;
    int test;
    bool operator<(const RowKey &other) const {
      if (kind != other.kind) return kind < other.kind;
      if (order != other.order) return order < other.order;
      if (train != other.train) return train < other.train;
      return test < other.test;
    }
  };
  std::set<int> size_set;
  std::map<RowKey, std::map<int, std::string>> rows;
  std::map<RowKey, std::pair<std::string, std::string>> row_labels;
  for (const GridCell &cell : report.cells) {
    size_set.insert(cell.size);
    RowKey key;
    key.kind = static_cast<int>(cell.kind);
    key.order = cell.kind == ModelKind::kCm ? 0 : cell.order;
    key.train = cell.kind == ModelKind::kVqCombined
                    ? 2
                    : LangIndex(cell.train_language);
    key.test = LangIndex(cell.test_language);
    rows[key][cell.size] = FormatFixed(cell.rate(), 1);
    row_labels[key] = {cell.kind == ModelKind::kCm
                           ? "-"
                           : std::to_string(cell.order),
                       std::string(ModelKindName(cell.kind)) + "\t" +
                           cell.PairLabel()};
  }
  {
    std::ostringstream out;
    out << "kind\torder\tpair";
    for (int size : size_set) out << '\t' << size;
    out << '\n';
    for (const auto &[key, cells] : rows) {
      const auto &[order_label, kind_pair] = row_labels[key];
      size_t tab = kind_pair.find('\t');
      out << kind_pair.substr(0, tab) << '\t' << order_label << '\t'
          << kind_pair.substr(tab + 1);
      for (int size : size_set) {
        auto it = cells.find(size);
        out << '\t' << (it == cells.end() ? "" : it->second);
      }
      out << '\n';
    }
    WriteTextFile(path("rates_wide.tsv"), out.str());
  }

  {
    std::ostringstream out;
    out << "kind\torder\tsize\ttrain\ttest\tcorrect\ttotal\trate\t"
           "regularized_models\tclamped_frames\thigh_order\n";
    for (const GridCell &cell : report.cells) {
      out << ModelKindName(cell.kind) << '\t' << cell.order << '\t'
          << cell.size << '\t' << cell.TrainLabel() << '\t'
          << LanguageName(cell.test_language) << '\t' << cell.correct << '\t'
          << cell.total << '\t' << FormatDouble(cell.rate()) << '\t'
          << cell.regularized_models << '\t' << cell.clamped_frames << '\t'
          << (cell.high_order ? 1 : 0) << '\n';
    }
    WriteTextFile(path("rates_long.tsv"), out.str());
  }

  {
    std::ostringstream out;
    out << "kind\torder\tsize\ttrain\ttest\tspeaker\ttask\tpredicted\t"
           "score\tcorrect\n";
    for (const GridCell &cell : report.cells) {
      for (const TrialRecord &trial : cell.trials) {
        out << ModelKindName(cell.kind) << '\t' << cell.order << '\t'
            << cell.size << '\t' << cell.TrainLabel() << '\t'
            << LanguageName(cell.test_language) << '\t' << trial.speaker_id
            << '\t' << trial.task_id << '\t' << trial.predicted << '\t'
            << FormatDouble(trial.score) << '\t' << (trial.correct ? 1 : 0)
            << '\n';
      }
    }
    WriteTextFile(path("trials.tsv"), out.str());
  }

  {
    std::ostringstream out;
    out << "kind\torder\tsize\ttrain\ttest\ttrue\tpredicted\tcount\n";
    for (const GridCell &cell : report.cells) {
      for (const auto &[pair, count] : cell.confusion) {
        out << ModelKindName(cell.kind) << '\t' << cell.order << '\t'
            << cell.size << '\t' << cell.TrainLabel() << '\t'
            << LanguageName(cell.test_language) << '\t' << pair.first << '\t'
            << pair.second << '\t' << count << '\n';
      }
    }
    WriteTextFile(path("confusion.tsv"), out.str());
  }

  {
    std::ostringstream out;
    out << "mode\tcurve\torder\tbits\tcentroids\ttotal\n";
    auto emit = [&](const char *mode,
                    const std::vector<DistortionPoint> &points) {
      for (const DistortionPoint &point : points) {
        out << mode << '\t' << point.curve << '\t' << point.order << '\t'
            << point.bits << '\t' << point.centroids << '\t'
            << FormatDouble(point.total) << '\n';
      }
    };
    emit("all", report.distortion_all);
    emit("identified", report.distortion_identified);
    WriteTextFile(path("distortions.tsv"), out.str());
  }
}

}  // namespace spkid
