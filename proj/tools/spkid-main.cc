// tools/spkid-main.cc

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
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "spkid/analysis.h"
#include "spkid/cli-util.h"
#include "spkid/cm.h"
#include "spkid/error.h"
#include "spkid/eval.h"
#include "spkid/io-util.h"
#include "spkid/manifest.h"
#include "spkid/synth.h"
#include "spkid/types.h"
#include "spkid/version.h"
#include "spkid/vq.h"
#include "spkid/wav.h"

namespace spkid {
namespace {

constexpr int kLloydIterations = 10;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct AnalysisFlags {
  int frame = 240;
  std::string overlap = "2/3";
  double preemph = 0.95;
  double silence_db = 30.0;

  void Register(CLI::App *cmd) {
    cmd->add_option("--frame", frame, "Analysis frame length in samples");
    cmd->add_option("--overlap", overlap,
                    "Frame overlap as a fraction (2/3, 0.5, 3:4)");
    cmd->add_option("--preemph", preemph, "Preemphasis coefficient in [0,1)");
    cmd->add_option("--silence-db", silence_db,
                    "Silence floor in dB below the loudest frame");
  }

  AnalysisConfig Config(int order) const {
    AnalysisConfig config;
    config.frame_length = frame;
    config.overlap_fraction = ParseOverlap(overlap);
    config.preemphasis = preemph;
    config.lpc_order = order;
    config.silence_floor_db = silence_db;
    config.Validate();
    if (config.HighOrder())
      std::cerr << "warning: order " << order << " is high for "
                << frame << "-sample frames; expect degraded estimates\n";
    return config;
  }

  void Describe(KeyValues *entries) const {
    entries->emplace_back("frame", std::to_string(frame));
    entries->emplace_back("overlap", FormatDouble(ParseOverlap(overlap)));
    entries->emplace_back("preemph", FormatDouble(preemph));
    entries->emplace_back("silence_db", FormatDouble(silence_db));
  }
};

std::string JoinInts(const std::vector<int> &values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string JoinArgs(const std::vector<std::string> &args,
                     const std::string &fallback) {
  if (args.empty()) return fallback;
  std::string out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += args[i];
  }
  return out;
}

std::vector<Utterance> LoadCorpus(const std::string &manifest_path) {
  Manifest manifest = LoadManifest(manifest_path);
  std::vector<Utterance> corpus;
  corpus.reserve(manifest.entries.size());
  for (const ManifestEntry &entry : manifest.entries) {
    WavData wav = ReadWav(ResolveManifestPath(manifest_path, entry.path));
    Utterance utt;
    utt.samples = std::move(wav.samples);
    utt.sample_rate = wav.sample_rate;
    utt.speaker_id = entry.speaker_id;
    utt.language = entry.language;
    utt.split = entry.split;
    utt.task_id = entry.task_id;
    corpus.push_back(std::move(utt));
  }
  return corpus;
}

// Concatenated train-split features per (speaker, language); every speaker
// in the corpus must have train material in both languages.
std::map<std::pair<std::string, Language>, FeatureSequence> GroupTrainFeatures(
    const std::vector<Utterance> &corpus, const AnalysisConfig &config) {
  std::map<std::pair<std::string, Language>, FeatureSequence> groups;
  std::set<std::string> speakers;
  for (const Utterance &utt : corpus) {
    speakers.insert(utt.speaker_id);
    if (utt.split != Split::kTrain) continue;
    FeatureSequence features = ExtractFeatures(utt, config);
    auto key = std::make_pair(utt.speaker_id, utt.language);
    auto it = groups.find(key);
    if (it == groups.end()) {
      features.task_id = "train";
      groups.emplace(std::move(key), std::move(features));
    } else {
      AppendFrames(&it->second, features);
    }
  }
  for (const std::string &speaker : speakers) {
    for (Language lang : {Language::kA, Language::kB}) {
      if (groups.find({speaker, lang}) == groups.end())
        throw ProtocolError("speaker " + speaker +
                            " has no train utterance in language " +
                            LanguageName(lang));
    }
  }
  return groups;
}

struct SynthArgs {
  int speakers = 0;
  std::string out;
  uint64_t seed = kDefaultSeed;
  int states_a = 8;
  int states_b = 5;
  double train_s = 60.0;
  int tests = 5;
  double test_s = 4.0;
  int rate = 8000;
};

int RunSynth(const SynthArgs &args) {
  SynthesisSpec spec;
  spec.n_speakers = args.speakers;
  spec.n_states_lang_a = args.states_a;
  spec.n_states_lang_b = args.states_b;
  spec.train_duration_s = args.train_s;
  spec.n_test_utterances = args.tests;
  spec.test_duration_s = args.test_s;
  spec.sample_rate = args.rate;
  spec.seed = args.seed;
  std::vector<Utterance> corpus = GenerateSyntheticCorpus(spec);
  ExportCorpus(corpus, args.out);
  KeyValues entries{{"command", "synth"},
                    {"version", kVersion},
                    {"speakers", std::to_string(args.speakers)},
                    {"states_a", std::to_string(args.states_a)},
                    {"states_b", std::to_string(args.states_b)},
                    {"train_s", FormatDouble(args.train_s)},
                    {"tests", std::to_string(args.tests)},
                    {"test_s", FormatDouble(args.test_s)},
                    {"rate", std::to_string(args.rate)},
                    {"seed", std::to_string(args.seed)}};
  WriteRunManifest(
      (std::filesystem::path(args.out) / "run_manifest.tsv").string(),
      entries);
  std::cout << "wrote " << corpus.size() << " utterances\n";
  return 0;
}

struct TrainArgs {
  std::string manifest;
  std::string out;
  std::string kind = "vq";
  std::vector<std::string> bits;
  std::vector<std::string> order;
  uint64_t seed = kDefaultSeed;
  bool refine = false;
  AnalysisFlags analysis;
};

int RunTrain(const TrainArgs &args) {
  std::vector<Utterance> corpus = LoadCorpus(args.manifest);
  EnsureDirectory(args.out);
  int written = 0;
  auto model_path = [&](const std::string &speaker, const std::string &lang,
                        const std::string &kind, int size) {
    return (std::filesystem::path(args.out) /
            (speaker + "_" + lang + "_" + kind + std::to_string(size) +
             ".model"))
        .string();
  };

  KeyValues entries{{"command", "train"},
                    {"version", kVersion},
                    {"kind", args.kind}};

  if (args.kind == "cm") {
    std::vector<int> orders =
        ParseIntList(JoinArgs(args.order, "12"), 1, 199, "--order");
    for (int order : orders) {
      AnalysisConfig config = args.analysis.Config(order);
      auto groups = GroupTrainFeatures(corpus, config);
      for (const auto &[key, features] : groups) {
        CovarianceModel model = EstimateCovariance(features);
        WriteCmModel(model_path(key.first, LanguageName(key.second), "cm",
                                order),
                     model);
        ++written;
      }
    }
    entries.emplace_back("orders", JoinInts(orders));
  } else {
    std::vector<int> orders =
        ParseIntList(JoinArgs(args.order, "12"), 1, 199, "--order");
    if (orders.size() != 1)
      throw UsageError("codebook training takes a single --order");
    std::vector<int> bits_list =
        ParseIntList(JoinArgs(args.bits, "5"), 0, 24, "--bits");
    AnalysisConfig config = args.analysis.Config(orders[0]);
    auto groups = GroupTrainFeatures(corpus, config);
    int lloyd = args.refine ? kLloydIterations : 0;
    for (int bits : bits_list) {
      std::map<std::string, std::map<Language, Codebook>> books;
      for (const auto &[key, features] : groups) {
        books[key.first][key.second] = TrainCodebookRandom(
            features, bits, CodebookSeed(args.seed, key.first, key.second,
                                         bits),
            lloyd);
      }
      if (args.kind == "combined") {
        for (auto &[speaker, pair] : books) {
          WriteCodebook(model_path(speaker, "combined", "vq", bits),
                        CombineCodebooks(pair.at(Language::kA),
                                         pair.at(Language::kB)));
          ++written;
        }
      } else {
        for (auto &[speaker, pair] : books) {
          for (auto &[lang, book] : pair) {
            WriteCodebook(model_path(speaker, LanguageName(lang), "vq",
                                     bits),
                          book);
            ++written;
          }
        }
      }
    }
    entries.emplace_back("order", std::to_string(orders[0]));
    entries.emplace_back("bits", JoinInts(bits_list));
    entries.emplace_back("refine", args.refine ? "1" : "0");
  }
  args.analysis.Describe(&entries);
  entries.emplace_back("seed", std::to_string(args.seed));
  WriteRunManifest(
      (std::filesystem::path(args.out) / "run_manifest.tsv").string(),
      entries);
  std::cout << "wrote " << written << " model files\n";
  return 0;
}

struct IdentifyArgs {
  std::string models;
  std::string wav;
  std::string out;
  AnalysisFlags analysis;
};

int RunIdentify(const IdentifyArgs &args) {
  std::vector<std::string> paths;
  for (const auto &entry : std::filesystem::directory_iterator(args.models)) {
    if (entry.path().extension() == ".model")
      paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty())
    throw UsageError("no .model files in " + args.models);

  std::vector<Codebook> books;
  std::vector<CovarianceModel> cms;
  for (const std::string &path : paths) {
    std::string head = ReadTextFile(path).substr(0, 8);
    if (head.rfind("vqcb ", 0) == 0) {
      books.push_back(ReadCodebook(path));
    } else if (head.rfind("cmmodel ", 0) == 0) {
      cms.push_back(ReadCmModel(path));
    } else {
      throw ParseError(path + ": unrecognized model format");
    }
  }
  if (!books.empty() && !cms.empty())
    throw UsageError(args.models + " mixes codebook and covariance models");

  int dim = books.empty() ? cms[0].dim() : books[0].dim;
  for (const Codebook &book : books)
    if (book.dim != dim)
      throw DimensionError("model files disagree on the analysis order");
  for (const CovarianceModel &model : cms)
    if (model.dim() != dim)
      throw DimensionError("model files disagree on the analysis order");

  AnalysisConfig config = args.analysis.Config(dim);
  WavData wav = ReadWav(args.wav);
  Utterance utt;
  utt.samples = std::move(wav.samples);
  utt.sample_rate = wav.sample_rate;
  utt.speaker_id = "?";
  utt.task_id = std::filesystem::path(args.wav).filename().string();
  FeatureSequence features = ExtractFeatures(utt, config);

  std::vector<std::pair<std::string, double>> scores;
  if (!books.empty()) {
    scores = IdentifyVq(books, features).scores;
  } else {
    CovarianceModel test = EstimateCovariance(features);
    scores = IdentifyCm(cms, test.cov).scores;
  }
  std::sort(scores.begin(), scores.end(),
            [](const auto &a, const auto &b) {
              return a.second != b.second ? a.second < b.second
                                          : a.first < b.first;
            });
  std::ostringstream ranking;
  for (const auto &[speaker, score] : scores)
    ranking << speaker << '\t' << FormatDouble(score) << '\n';
  std::cout << ranking.str();

  if (!args.out.empty()) {
    EnsureDirectory(args.out);
    WriteTextFile(
        (std::filesystem::path(args.out) / "ranking.tsv").string(),
        "speaker\tscore\n" + ranking.str());
    KeyValues entries{{"command", "identify"},
                      {"version", kVersion},
                      {"kind", books.empty() ? "cm" : "vq"},
                      {"models", std::to_string(scores.size())},
                      {"order", std::to_string(dim)}};
    args.analysis.Describe(&entries);
    WriteRunManifest(
        (std::filesystem::path(args.out) / "run_manifest.tsv").string(),
        entries);
  }
  return 0;
}

struct EvaluateArgs {
  std::string manifest;
  std::string out;
  std::string kind = "vq";
  std::vector<std::string> sizes;
  std::vector<std::string> bits;
  std::vector<std::string> order;
  uint64_t seed = kDefaultSeed;
  bool refine = false;
  bool distortions = false;
  AnalysisFlags analysis;
};

int RunEvaluate(const EvaluateArgs &args) {
  std::vector<Utterance> corpus = LoadCorpus(args.manifest);
  EvalOptions options;
  options.seed = args.seed;
  options.lloyd_iterations = args.refine ? kLloydIterations : 0;

  EvaluationReport report;
  std::vector<int> sizes;
  KeyValues entries{{"command", "evaluate"},
                    {"version", kVersion},
                    {"kind", args.kind}};

  if (args.kind == "cm") {
    if (args.distortions)
      throw UsageError("--distortions applies to codebook evaluation");
    std::string spec = JoinArgs(args.sizes,
                                JoinArgs(args.order, "4,6,9,13,19,27,39,55"));
    sizes = ParseIntList(spec, 1, 199, "--sizes");
    options.analysis = args.analysis.Config(sizes.back());
    report = RunLanguageGrid(corpus, ModelKind::kCm, sizes, options);
    entries.emplace_back("orders", JoinInts(sizes));
  } else {
    std::vector<int> orders =
        ParseIntList(JoinArgs(args.order, "12"), 1, 199, "--order");
    if (orders.size() != 1)
      throw UsageError("codebook evaluation takes a single --order");
    sizes = ParseIntList(JoinArgs(args.sizes, JoinArgs(args.bits, "0..7")), 0,
                         24, "--sizes");
    options.analysis = args.analysis.Config(orders[0]);
    ModelKind kind =
        args.kind == "combined" ? ModelKind::kVqCombined : ModelKind::kVq;
    report = RunLanguageGrid(corpus, kind, sizes, options);
    if (args.distortions) {
      VqModelSweep sweep = TrainVqSweep(corpus, sizes, options);
      auto both = AccumulateDistortionsBothModes(corpus, sweep, options);
      report.distortion_all = std::move(both.first);
      report.distortion_identified = std::move(both.second);
    }
    entries.emplace_back("order", std::to_string(orders[0]));
    entries.emplace_back("bits", JoinInts(sizes));
    entries.emplace_back("refine", args.refine ? "1" : "0");
    entries.emplace_back("distortions", args.distortions ? "1" : "0");
  }

  EmitReport(report, args.out);
  args.analysis.Describe(&entries);
  entries.emplace_back("seed", std::to_string(args.seed));
  WriteRunManifest(
      (std::filesystem::path(args.out) / "run_manifest.tsv").string(),
      entries);
  for (const GridCell &cell : report.cells) {
    std::cout << ModelKindName(cell.kind) << "\tP=" << cell.order
              << "\tsize=" << cell.size << '\t' << cell.PairLabel() << '\t'
              << FormatFixed(cell.rate(), 1) << "%\n";
  }
  return 0;
}

struct ParityArgs {
  int pvq = 12;
  std::string out;
};

int RunParity(const ParityArgs &args) {
  std::vector<std::pair<int, int>> pairs = MemoryParityPairs(args.pvq);
  std::ostringstream table;
  table << "Nq\tvq_params\tcm_order\tcm_params\n";
  for (const auto &[nq, p_cm] : pairs) {
    table << nq << '\t' << CountVqParameters(nq, args.pvq) << '\t' << p_cm
          << '\t' << CountCmParameters(p_cm) << '\n';
  }
  std::cout << table.str();
  if (!args.out.empty()) {
    EnsureDirectory(args.out);
    WriteTextFile((std::filesystem::path(args.out) / "parity.tsv").string(),
                  table.str());
    KeyValues entries{{"command", "parity"},
                      {"version", kVersion},
                      {"pvq", std::to_string(args.pvq)}};
    WriteRunManifest(
        (std::filesystem::path(args.out) / "run_manifest.tsv").string(),
        entries);
  }
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"Closed-set bilingual speaker identification"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  CLI::App *synth = app.add_subcommand(
      "synth", "Generate a deterministic synthetic bilingual corpus");
  synth->add_option("--speakers", synth_args.speakers, "Number of speakers")
      ->required();
  synth->add_option("--out", synth_args.out, "Output directory")->required();
  synth->add_option("--seed", synth_args.seed, "Corpus seed");
  synth->add_option("--states-a", synth_args.states_a,
                    "Resonator states for language A");
  synth->add_option("--states-b", synth_args.states_b,
                    "Resonator states for language B");
  synth->add_option("--train-s", synth_args.train_s,
                    "Train utterance seconds per language");
  synth->add_option("--tests", synth_args.tests,
                    "Test utterances per language");
  synth->add_option("--test-s", synth_args.test_s,
                    "Test utterance seconds");
  synth->add_option("--rate", synth_args.rate, "Sample rate in Hz");

  TrainArgs train_args;
  CLI::App *train = app.add_subcommand(
      "train", "Train speaker models from a corpus manifest");
  train->add_option("--manifest", train_args.manifest, "Corpus manifest TSV")
      ->required();
  train->add_option("--out", train_args.out, "Model output directory")
      ->required();
  train->add_option("--kind", train_args.kind, "Model kind")
      ->check(CLI::IsMember({"vq", "cm", "combined"}));
  train->add_option("--bits", train_args.bits,
                    "Codebook bits, list or range (0,2 or 0..7)");
  train->add_option("--order", train_args.order,
                    "Analysis order P (list or range for cm)");
  train->add_option("--seed", train_args.seed, "Codebook sampling seed");
  train->add_flag("--refine", train_args.refine,
                  "Refine codebooks with 10 Lloyd iterations");
  train_args.analysis.Register(train);

  IdentifyArgs identify_args;
  CLI::App *identify = app.add_subcommand(
      "identify", "Rank the models in a directory against one utterance");
  identify->add_option("--models", identify_args.models, "Model directory")
      ->required();
  identify->add_option("--wav", identify_args.wav, "Test utterance WAV")
      ->required();
  identify->add_option("--out", identify_args.out,
                       "Optional directory for the ranking report");
  identify_args.analysis.Register(identify);

  EvaluateArgs evaluate_args;
  CLI::App *evaluate = app.add_subcommand(
      "evaluate", "Run the train/test language grid and write reports");
  evaluate->add_option("--manifest", evaluate_args.manifest,
                       "Corpus manifest TSV")
      ->required();
  evaluate->add_option("--out", evaluate_args.out, "Report directory")
      ->required();
  evaluate->add_option("--kind", evaluate_args.kind, "Model kind")
      ->check(CLI::IsMember({"vq", "cm", "combined"}));
  evaluate->add_option("--sizes", evaluate_args.sizes,
                       "Model sizes: bits for vq/combined, orders for cm");
  evaluate->add_option("--bits", evaluate_args.bits, "Alias for --sizes");
  evaluate->add_option("--order", evaluate_args.order,
                       "Analysis order P (vq/combined) or size list (cm)");
  evaluate->add_option("--seed", evaluate_args.seed, "Codebook sampling seed");
  evaluate->add_flag("--refine", evaluate_args.refine,
                     "Refine codebooks with 10 Lloyd iterations");
  evaluate->add_flag("--distortions", evaluate_args.distortions,
                     "Also accumulate distortion-vs-size profiles");
  evaluate_args.analysis.Register(evaluate);

  ParityArgs parity_args;
  CLI::App *parity = app.add_subcommand(
      "parity", "Match covariance orders to codebook parameter counts");
  parity->add_option("--pvq", parity_args.pvq, "Codebook analysis order");
  parity->add_option("--out", parity_args.out,
                     "Optional directory for the parity table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*synth) return RunSynth(synth_args);
    if (*train) return RunTrain(train_args);
    if (*identify) return RunIdentify(identify_args);
    if (*evaluate) return RunEvaluate(evaluate_args);
    if (*parity) return RunParity(parity_args);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace spkid

int main(int argc, char **argv) { return spkid::Main(argc, argv); }
