// spkid/analysis.h

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

#ifndef SPKID_ANALYSIS_H_
#define SPKID_ANALYSIS_H_

#include <span>
#include <string>
#include <vector>

#include "spkid/types.h"

namespace spkid {

// Front-end settings. Defaults: 240-sample frames with 2/3 overlap (hop 80),
// preemphasis 0.95, Hamming window, order-12 LPCC, 30 dB silence floor.
struct AnalysisConfig {
  int frame_length = 240;
  double overlap_fraction = 2.0 / 3.0;
  double preemphasis = 0.95;
  int lpc_order = 12;
  double silence_floor_db = 30.0;

  // frame_length * (1 - overlap_fraction), which must round to a positive
  // integer; Validate() rejects configs where it does not.
  int Hop() const;

  // Throws UsageError on violated hard constraints (frame length, overlap,
  // preemphasis range, order bounds).
  void Validate() const;

  // True when the order is too high for reliable autocorrelation estimates
  // from frames of this length (order above frame_length / 10, i.e. above 24
  // for 240-sample frames). Such configs still run, since the degradation
  // itself is of interest, but the condition is flagged everywhere.
  bool HighOrder() const { return 10 * lpc_order > frame_length; }
};

// y[0] = x[0]; y[n] = x[n] - coefficient * x[n-1]. Coefficient in [0, 1).
std::vector<double> Preemphasize(std::span<const double> samples,
                                 double coefficient);

// Full frames at offsets 0, hop, 2*hop, ...; a trailing partial frame is
// discarded. The spans alias `samples`.
std::vector<std::span<const double>> FrameSignal(std::span<const double> samples,
                                                 int frame_length, int hop);

// Keeps frames whose log energy 10*log10(sum x^2 + 1e-12) is within
// floor_db of the loudest frame, preserving order. Throws
// EmptyUtteranceError when there are no frames or the whole utterance is
// dead silence.
std::vector<std::span<const double>> RemoveSilence(
    const std::vector<std::span<const double>> &frames, double floor_db);

// w[n] = 0.54 - 0.46 cos(2 pi n / (L-1)), L >= 2.
std::vector<double> HammingWindow(int length);

// Elementwise multiply by the Hamming window of the frame's length.
void ApplyWindow(std::span<double> frame);

// Biased autocorrelation r[k] = sum_{n=k}^{L-1} x[n] x[n-k], k = 0..order.
std::vector<double> Autocorrelate(std::span<const double> frame, int order);

struct LpcResult {
  std::vector<double> coeffs;   // a_1..a_P for x^[n] = sum_k a_k x[n-k]
  double residual_gain = 0.0;   // prediction error power
  bool clamped = false;         // some reflection coefficient hit the guard
};

// Order-recursive solution of the normal equations. Reflection coefficients
// with magnitude >= 1 are clamped to +-0.999 and flagged. Throws
// DegenerateFrameError when r[0] <= 0.
LpcResult LevinsonDurbin(std::span<const double> autocorr, int order);

// c_n = a_n + sum_{k=1}^{n-1} (k/n) c_k a_{n-k}; the energy term c_0 is
// excluded, so the output has exactly P entries.
std::vector<double> LpcToCepstrum(std::span<const double> lpc);

struct ExtractStats {
  int frames_total = 0;
  int frames_kept = 0;
  int clamped_frames = 0;
  bool high_order = false;
};

// preemphasize -> frame -> remove silence -> window -> autocorrelate ->
// Levinson-Durbin -> cepstrum, one LPCC vector per retained frame.
FeatureSequence ExtractFeatures(const Utterance &utterance,
                                const AnalysisConfig &config,
                                ExtractStats *stats = nullptr);

// Windows the frame and runs the prediction chain, writing order cepstral
// coefficients to out. Returns whether the reflection guard fired. This is
// the per-frame routine both kernel backends share.
bool ComputeFrameLpcc(std::span<const double> frame,
                      std::span<const double> window, int order, double *out);

// Feature dump TSV: header "# lpcc P=<P>", then one row of P round-trip
// decimal floats per frame.
void WriteFeatureDump(const std::string &path, const FeatureSequence &features);
FeatureSequence ReadFeatureDump(const std::string &path);

}  // namespace spkid

#endif  // SPKID_ANALYSIS_H_
