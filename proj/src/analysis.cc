// src/analysis.cc

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

#include "spkid/analysis.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/kernels.h"

namespace spkid {

int AnalysisConfig::Hop() const {
  double exact = frame_length * (1.0 - overlap_fraction);
  return static_cast<int>(std::lround(exact));
}

void AnalysisConfig::Validate() const {
  if (frame_length < 2)
    throw UsageError("analysis config: frame_length must be >= 2");
  if (overlap_fraction < 0.0 || overlap_fraction >= 1.0)
    throw UsageError("analysis config: overlap_fraction must be in [0, 1)");
  double exact = frame_length * (1.0 - overlap_fraction);
  int hop = Hop();
  if (hop < 1 || std::fabs(exact - hop) > 1e-6)
    throw UsageError(
        "analysis config: frame_length * (1 - overlap_fraction) must be a "
        "positive integer, got " + FormatDouble(exact));
  if (preemphasis < 0.0 || preemphasis >= 1.0)
    throw UsageError("analysis config: preemphasis must be in [0, 1)");
  if (lpc_order < 1)
    throw UsageError("analysis config: lpc_order must be >= 1");
  if (lpc_order >= frame_length)
    throw UsageError("analysis config: lpc_order must be below frame_length");
  if (silence_floor_db <= 0.0)
    throw UsageError("analysis config: silence_floor_db must be positive");
}

std::vector<double> Preemphasize(std::span<const double> samples,
                                 double coefficient) {
  if (coefficient < 0.0 || coefficient >= 1.0)
    throw UsageError("preemphasis coefficient must be in [0, 1)");
  std::vector<double> out(samples.size());
  if (samples.empty()) return out;
  out[0] = samples[0];
  for (size_t n = 1; n < samples.size(); ++n)
    out[n] = samples[n] - coefficient * samples[n - 1];
  return out;
}

std::vector<std::span<const double>> FrameSignal(
    std::span<const double> samples, int frame_length, int hop) {
  if (frame_length < 1) throw UsageError("frame_length must be >= 1");
  if (hop < 1) throw UsageError("hop must be >= 1");
  std::vector<std::span<const double>> frames;
  size_t length = static_cast<size_t>(frame_length);
  for (size_t offset = 0; offset + length <= samples.size();
       offset += static_cast<size_t>(hop))
    frames.push_back(samples.subspan(offset, length));
  return frames;
}

std::vector<std::span<const double>> RemoveSilence(
    const std::vector<std::span<const double>> &frames, double floor_db) {
  if (frames.empty())
    throw EmptyUtteranceError("utterance has no full analysis frame");
  std::vector<double> energy(frames.size());
  double max_energy = 0.0;
  for (size_t i = 0; i < frames.size(); ++i) {
    double e = 0.0;
    for (double v : frames[i]) e += v * v;
    energy[i] = e;
    if (e > max_energy) max_energy = e;
  }
  if (max_energy <= 0.0)
    throw EmptyUtteranceError("utterance is all zeros");
  double threshold_db = 10.0 * std::log10(max_energy + 1e-12) - floor_db;
  std::vector<std::span<const double>> kept;
  kept.reserve(frames.size());
  for (size_t i = 0; i < frames.size(); ++i) {
    if (10.0 * std::log10(energy[i] + 1e-12) >= threshold_db)
      kept.push_back(frames[i]);
  }
  if (kept.empty())
    throw EmptyUtteranceError("all frames fell below the silence floor");
  return kept;
}

std::vector<double> HammingWindow(int length) {
  if (length < 2) throw UsageError("window length must be >= 2");
  std::vector<double> window(length);
  for (int n = 0; n < length; ++n)
    window[n] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n /
                                       (length - 1));
  return window;
}

void ApplyWindow(std::span<double> frame) {
  std::vector<double> window = HammingWindow(static_cast<int>(frame.size()));
  for (size_t n = 0; n < frame.size(); ++n) frame[n] *= window[n];
}

std::vector<double> Autocorrelate(std::span<const double> frame, int order) {
  int length = static_cast<int>(frame.size());
  if (order < 0 || order >= length)
    throw UsageError("autocorrelation order must be below the frame length");
  std::vector<double> r(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (int n = k; n < length; ++n) acc += frame[n] * frame[n - k];
    r[k] = acc;
  }
  return r;
}

LpcResult LevinsonDurbin(std::span<const double> autocorr, int order) {
  if (static_cast<int>(autocorr.size()) < order + 1)
    throw UsageError("autocorrelation too short for requested order");
  if (autocorr[0] <= 0.0)
    throw DegenerateFrameError("zero-energy frame in predictor analysis");
  LpcResult result;
  result.coeffs.assign(order, 0.0);
  std::vector<double> prev(order, 0.0);
  double error = autocorr[0];
  for (int i = 1; i <= order; ++i) {
    double acc = autocorr[i];
    for (int j = 1; j < i; ++j) acc -= prev[j - 1] * autocorr[i - j];
    double k = acc / error;
    if (!(std::fabs(k) < 1.0)) {
      k = k > 0.0 ? 0.999 : -0.999;
      result.clamped = true;
    }
    result.coeffs[i - 1] = k;
    for (int j = 1; j < i; ++j)
      result.coeffs[j - 1] = prev[j - 1] - k * prev[i - j - 1];
    error *= 1.0 - k * k;
    for (int j = 0; j < i; ++j) prev[j] = result.coeffs[j];
  }
  result.residual_gain = error;
  return result;
}

std::vector<double> LpcToCepstrum(std::span<const double> lpc) {
  int order = static_cast<int>(lpc.size());
  std::vector<double> cepstrum(order, 0.0);
  for (int n = 1; n <= order; ++n) {
    double acc = lpc[n - 1];
    for (int k = 1; k < n; ++k)
      acc += static_cast<double>(k) / n * cepstrum[k - 1] * lpc[n - k - 1];
    cepstrum[n - 1] = acc;
  }
  return cepstrum;
}

bool ComputeFrameLpcc(std::span<const double> frame,
                      std::span<const double> window, int order,
                      double *out) {
  std::vector<double> windowed(frame.size());
  for (size_t n = 0; n < frame.size(); ++n)
    windowed[n] = frame[n] * window[n];
  std::vector<double> r = Autocorrelate(windowed, order);
  LpcResult lpc = LevinsonDurbin(r, order);
  std::vector<double> cepstrum = LpcToCepstrum(lpc.coeffs);
  for (int i = 0; i < order; ++i) out[i] = cepstrum[i];
  return lpc.clamped;
}

FeatureSequence ExtractFeatures(const Utterance &utterance,
                                const AnalysisConfig &config,
                                ExtractStats *stats) {
  config.Validate();
  if (utterance.samples.empty())
    throw EmptyUtteranceError("utterance " + utterance.speaker_id + "/" +
                              utterance.task_id + " has no samples");
  std::vector<double> preemphasized =
      Preemphasize(utterance.samples, config.preemphasis);
  std::vector<std::span<const double>> frames =
      FrameSignal(preemphasized, config.frame_length, config.Hop());
  std::vector<std::span<const double>> kept =
      RemoveSilence(frames, config.silence_floor_db);
  std::vector<double> window = HammingWindow(config.frame_length);

  FeatureSequence features;
  features.dim = config.lpc_order;
  features.speaker_id = utterance.speaker_id;
  features.language = utterance.language;
  features.task_id = utterance.task_id;
  features.data.resize(kept.size() * static_cast<size_t>(config.lpc_order));
  int clamped = kernels::LpccBatch(kept, window, config.lpc_order,
                                   features.data.data());
  if (stats != nullptr) {
    stats->frames_total = static_cast<int>(frames.size());
    stats->frames_kept = static_cast<int>(kept.size());
    stats->clamped_frames = clamped;
    stats->high_order = config.HighOrder();
  }
  return features;
}

void WriteFeatureDump(const std::string &path,
                      const FeatureSequence &features) {
  std::ostringstream out;
  out << "# lpcc P=" << features.dim << '\n';
  for (int t = 0; t < features.num_frames(); ++t) {
    std::span<const double> frame = features.frame(t);
    for (int i = 0; i < features.dim; ++i) {
      if (i > 0) out << '\t';
      out << FormatDouble(frame[i]);
    }
    out << '\n';
  }
  WriteTextFile(path, out.str());
}

FeatureSequence ReadFeatureDump(const std::string &path) {
  std::vector<std::string> lines = SplitLines(ReadTextFile(path));
  if (lines.empty() || lines[0].rfind("# lpcc ", 0) != 0)
    throw ParseError(path + ": missing '# lpcc P=...' header");
  FeatureSequence features;
  features.dim = static_cast<int>(
      ParseInt(KeyedValue(lines[0].substr(7), "P", path), path));
  if (features.dim < 1) throw ParseError(path + ": bad dimension");
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::string context = path + ":" + std::to_string(i + 1);
    std::vector<std::string> fields = SplitChar(lines[i], '\t');
    if (static_cast<int>(fields.size()) != features.dim)
      throw ParseError(context + ": expected " +
                       std::to_string(features.dim) + " values, got " +
                       std::to_string(fields.size()));
    for (const std::string &field : fields)
      features.data.push_back(ParseDouble(field, context));
  }
  return features;
}

}  // namespace spkid
