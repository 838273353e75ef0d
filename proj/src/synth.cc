// src/synth.cc

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

#include "spkid/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>

#include "spkid/error.h"
#include "spkid/rng.h"
#include "spkid/wav.h"

namespace spkid {

namespace {

constexpr double kSilenceSeconds = 0.2;
constexpr double kSilenceSigma = 2e-4;
constexpr double kPeakTarget = 0.9;
constexpr double kExcitationSigma = 0.1;
constexpr double kMinSegmentSeconds = 0.2;
constexpr double kMaxSegmentSeconds = 0.45;
constexpr double kSegmentJitter = 0.03;

// One vowel-like state: two cascaded two-pole resonators.
struct ResonatorState {
  double f1, bw1;
  double f2, bw2;
};

struct Biquad {
  double c1 = 0.0, c2 = 0.0;  // y[n] = x[n] + c1*y[n-1] + c2*y[n-2]
  double y1 = 0.0, y2 = 0.0;

  void SetPole(double freq_hz, double bw_hz, int sample_rate) {
    double nyquist_guard = 0.48 * sample_rate;
    double f = std::min(freq_hz, nyquist_guard);
    double r = std::exp(-std::numbers::pi * bw_hz / sample_rate);
    double theta = 2.0 * std::numbers::pi * f / sample_rate;
    c1 = 2.0 * r * std::cos(theta);
    c2 = -r * r;
  }

  double Step(double x) {
    double y = x + c1 * y1 + c2 * y2;
    y2 = y1;
    y1 = y;
    return y;
  }
};

struct SpeakerBank {
  std::vector<ResonatorState> states;
  double lang_b_shift = 0.0;
  double tilt_pole = 0.0;
  double source_zero = 0.0;
  double f3 = 0.0, bw3 = 0.0;  // state-independent upper resonance
};

SpeakerBank DrawSpeakerBank(const SynthesisSpec &spec, int speaker_index) {
  SpeakerBank bank;
  Rng rng(MixSeed(spec.seed, kSaltSpeakerBank,
                  static_cast<uint64_t>(speaker_index)));
  // Speaker-wide draws shared by every state in both languages: a vocal
  // tract length scale, a resonance width scale, an excitation tilt, and
  // a fixed upper resonance.
  double tract_scale = rng.NextUniform(0.72, 1.35);
  double width_scale = rng.NextUniform(0.7, 1.35);
  bank.tilt_pole = rng.NextUniform(0.05, 0.7);
  bank.source_zero = rng.NextUniform(0.2, 0.8);
  bank.f3 = rng.NextUniform(2650.0, 3700.0);
  bank.bw3 = rng.NextUniform(100.0, 240.0);
  int n_states = std::max(spec.n_states_lang_a, spec.n_states_lang_b);
  bank.states.resize(n_states);
  for (ResonatorState &state : bank.states) {
    state.f1 = tract_scale * rng.NextUniform(360.0, 720.0);
    state.f2 = tract_scale * rng.NextUniform(1500.0, 2550.0);
    state.bw1 = width_scale * rng.NextUniform(25.0, 70.0);
    state.bw2 = width_scale * rng.NextUniform(35.0, 110.0);
  }
  bank.lang_b_shift = rng.NextUniform(-0.02, 0.02);
  return bank;
}

std::vector<double> SynthesizeUtterance(const SynthesisSpec &spec,
                                        const SpeakerBank &bank,
                                        Language language,
                                        double duration_s, uint64_t seed) {
  Rng rng(seed);
  int fs = spec.sample_rate;
  int n_silence = static_cast<int>(std::lround(kSilenceSeconds * fs));
  int n_body = static_cast<int>(std::lround(duration_s * fs));
  int n_states = language == Language::kA ? spec.n_states_lang_a
                                          : spec.n_states_lang_b;
  double shift = language == Language::kA ? 0.0 : bank.lang_b_shift;

  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(n_body) + 2 * n_silence);
  for (int i = 0; i < n_silence; ++i)
    samples.push_back(kSilenceSigma * rng.NextGaussian());

  Biquad first, second, third;
  third.SetPole(bank.f3, bank.bw3, fs);
  double tilt_state = 0.0, tilt_prev = 0.0;
  // Segments cycle through the states in shuffled round-robin order, the
  // way a fixed text exercises every vowel; no utterance can dwell on a
  // single state.
  std::vector<int> order(n_states);
  for (int i = 0; i < n_states; ++i) order[i] = i;
  int cursor = n_states;
  int produced = 0;
  while (produced < n_body) {
    if (cursor == n_states) {
      for (int i = n_states - 1; i > 0; --i)
        std::swap(order[i], order[rng.NextInt(i + 1)]);
      cursor = 0;
    }
    const ResonatorState &state = bank.states[order[cursor++]];
    // Per-segment jitter keeps the frame cloud connected between states.
    double j1 = rng.NextUniform(-kSegmentJitter, kSegmentJitter);
    double j2 = rng.NextUniform(-kSegmentJitter, kSegmentJitter);
    first.SetPole(state.f1 * (1.0 + shift) * (1.0 + j1), state.bw1, fs);
    second.SetPole(state.f2 * (1.0 + shift) * (1.0 + j2), state.bw2, fs);
    double seg_s = rng.NextUniform(kMinSegmentSeconds, kMaxSegmentSeconds);
    int seg_len = std::min(n_body - produced,
                           static_cast<int>(std::lround(seg_s * fs)));
    for (int i = 0; i < seg_len; ++i) {
      double x = kExcitationSigma * rng.NextGaussian();
      tilt_state = x + bank.tilt_pole * tilt_state;
      double excite = tilt_state - bank.source_zero * tilt_prev;
      tilt_prev = tilt_state;
      samples.push_back(third.Step(second.Step(first.Step(excite))));
    }
    produced += seg_len;
  }

  for (int i = 0; i < n_silence; ++i)
    samples.push_back(kSilenceSigma * rng.NextGaussian());

  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::fabs(v));
  if (peak > 0.0) {
    double scale = kPeakTarget / peak;
    for (double &v : samples) v *= scale;
  }
  return samples;
}

void ValidateSpec(const SynthesisSpec &spec) {
  if (spec.n_speakers < 1)
    throw UsageError("synthesis spec: n_speakers must be >= 1");
  if (spec.n_states_lang_a < 1 || spec.n_states_lang_b < 1)
    throw UsageError("synthesis spec: state counts must be >= 1");
  if (spec.train_duration_s <= 0.0 || spec.test_duration_s <= 0.0)
    throw UsageError("synthesis spec: durations must be positive");
  if (spec.n_test_utterances < 0)
    throw UsageError("synthesis spec: n_test_utterances must be >= 0");
  if (spec.sample_rate < 1000)
    throw UsageError("synthesis spec: sample_rate must be >= 1000");
}

std::string SpeakerName(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "spk%03d", index);
  return buf;
}

}  // namespace

std::vector<Utterance> GenerateSyntheticCorpus(const SynthesisSpec &spec) {
  ValidateSpec(spec);
  std::vector<Utterance> corpus;
  corpus.reserve(static_cast<size_t>(spec.n_speakers) * 2 *
                 (1 + spec.n_test_utterances));
  for (int s = 0; s < spec.n_speakers; ++s) {
    SpeakerBank bank = DrawSpeakerBank(spec, s);
    for (Language lang : {Language::kA, Language::kB}) {
      uint64_t lang_index = lang == Language::kA ? 0 : 1;
      for (int u = 0; u <= spec.n_test_utterances; ++u) {
        uint64_t seed =
            MixSeed(spec.seed, kSaltUtterance,
                    static_cast<uint64_t>(s) * 2 + lang_index,
                    static_cast<uint64_t>(u));
        double duration =
            u == 0 ? spec.train_duration_s : spec.test_duration_s;
        Utterance utt;
        utt.samples = SynthesizeUtterance(spec, bank, lang, duration, seed);
        utt.sample_rate = spec.sample_rate;
        utt.speaker_id = SpeakerName(s);
        utt.language = lang;
        utt.split = u == 0 ? Split::kTrain : Split::kTest;
        utt.task_id = u == 0 ? "train" : "s" + std::to_string(u);
        corpus.push_back(std::move(utt));
      }
    }
  }
  return corpus;
}

Manifest ExportCorpus(const std::vector<Utterance> &corpus,
                      const std::string &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir);
  Manifest manifest;
  for (const Utterance &utt : corpus) {
    std::string name = utt.speaker_id + "_" + LanguageName(utt.language) +
                       "_" + utt.task_id + ".wav";
    WriteWav((std::filesystem::path(out_dir) / name).string(), utt.samples,
             utt.sample_rate);
    ManifestEntry entry;
    entry.path = name;
    entry.speaker_id = utt.speaker_id;
    entry.language = utt.language;
    entry.split = utt.split;
    entry.task_id = utt.task_id;
    manifest.entries.push_back(std::move(entry));
  }
  WriteManifest((std::filesystem::path(out_dir) / "manifest.tsv").string(),
                manifest);
  return manifest;
}

}  // namespace spkid
