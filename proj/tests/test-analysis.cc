// tests/test-analysis.cc

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

#include <cmath>
#include <filesystem>
#include <vector>

#include "doctest.h"
#include "spkid/analysis.h"
#include "spkid/error.h"
#include "spkid/rng.h"
#include "spkid/synth.h"

namespace {

// Straightforward Gaussian elimination with partial pivoting, used as the
// reference solver for the normal equations.
std::vector<double> SolveDense(std::vector<std::vector<double>> m,
                               std::vector<double> rhs) {
  int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = col + 1; row < n; ++row) {
      double f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int row = n - 1; row >= 0; --row) {
    double acc = rhs[row];
    for (int k = row + 1; k < n; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return x;
}

// Builds the autocorrelation sequence whose reflection coefficients are
// exactly `ks` (r[0] = 1), by running the order recursion forward.
std::vector<double> AutocorrFromReflections(const std::vector<double> &ks) {
  int p = static_cast<int>(ks.size());
  std::vector<double> r(p + 1, 0.0);
  r[0] = 1.0;
  std::vector<double> a(p + 1, 0.0);
  double error = 1.0;
  for (int m = 1; m <= p; ++m) {
    double acc = 0.0;
    for (int i = 1; i < m; ++i) acc += a[i] * r[m - i];
    r[m] = ks[m - 1] * error + acc;
    std::vector<double> prev(a.begin(), a.begin() + m);
    a[m] = ks[m - 1];
    for (int i = 1; i < m; ++i) a[i] = prev[i] - ks[m - 1] * prev[m - i];
    error *= 1.0 - ks[m - 1] * ks[m - 1];
  }
  return r;
}

spkid::Utterance SynthUtterance(double seconds) {
  spkid::SynthesisSpec spec;
  spec.n_speakers = 1;
  spec.train_duration_s = seconds;
  spec.n_test_utterances = 0;
  spec.seed = 11;
  return spkid::GenerateSyntheticCorpus(spec).front();
}

}  // namespace

TEST_CASE("Preemphasis keeps the first sample and differences the rest") {
  std::vector<double> x{1.0, 1.0, 0.5};
  auto y = spkid::Preemphasize(x, 0.95);
  REQUIRE(y.size() == 3);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == doctest::Approx(1.0 - 0.95));
  CHECK(y[2] == doctest::Approx(0.5 - 0.95));
}

TEST_CASE("Framing yields full frames only, at hop offsets") {
  std::vector<double> x(400, 1.0);
  auto frames = spkid::FrameSignal(x, 240, 80);
  REQUIRE(frames.size() == 3);
  CHECK(frames[0].data() == x.data());
  CHECK(frames[1].data() == x.data() + 80);
  CHECK(frames[2].data() == x.data() + 160);
  CHECK(spkid::FrameSignal(std::vector<double>(239, 0.0), 240, 80).empty());
}

TEST_CASE("Silence removal keeps only frames near the loudest one") {
  std::vector<double> x(720, 0.0);
  for (int i = 0; i < 240; ++i) x[i] = 1e-5;        // far below the floor
  for (int i = 240; i < 480; ++i) x[i] = 1.0;
  for (int i = 480; i < 720; ++i) x[i] = 0.5;       // -6 dB, kept
  auto frames = spkid::FrameSignal(x, 240, 240);
  auto kept = spkid::RemoveSilence(frames, 30.0);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].data() == x.data() + 240);
}

TEST_CASE("Dead input raises EmptyUtteranceError") {
  std::vector<double> zeros(1000, 0.0);
  auto frames = spkid::FrameSignal(zeros, 240, 80);
  CHECK_THROWS_AS(spkid::RemoveSilence(frames, 30.0),
                  spkid::EmptyUtteranceError);
  CHECK_THROWS_AS(
      spkid::RemoveSilence(std::vector<std::span<const double>>{}, 30.0),
      spkid::EmptyUtteranceError);
}

TEST_CASE("Hamming window has the textbook endpoints and symmetry") {
  auto w = spkid::HammingWindow(240);
  CHECK(w[0] == doctest::Approx(0.08));
  CHECK(w[239] == doctest::Approx(0.08));
  for (int i = 0; i < 120; ++i) CHECK(w[i] == doctest::Approx(w[239 - i]));
  double mid = 0.54 - 0.46 * std::cos(2.0 * M_PI * 119.5 / 239.0);
  CHECK(w[119] + w[120] == doctest::Approx(2 * mid).epsilon(1e-3));
}

TEST_CASE("Autocorrelation of a constant frame") {
  std::vector<double> x{1.0, 1.0, 1.0, 1.0};
  auto r = spkid::Autocorrelate(x, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 4.0);
  CHECK(r[1] == 3.0);
}

TEST_CASE("Levinson-Durbin solves the hand cases") {
  auto one = spkid::LevinsonDurbin(std::vector<double>{1.0, 0.9}, 1);
  REQUIRE(one.coeffs.size() == 1);
  CHECK(one.coeffs[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(one.residual_gain == doctest::Approx(1.0 - 0.81).epsilon(1e-12));

  auto two = spkid::LevinsonDurbin(std::vector<double>{1.0, 0.5, 0.25}, 2);
  REQUIRE(two.coeffs.size() == 2);
  CHECK(two.coeffs[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.coeffs[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(two.clamped);
}

TEST_CASE("Levinson-Durbin matches a dense normal-equation solve") {
  spkid::Rng rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    int p = 1 + static_cast<int>(rng.NextInt(20));
    std::vector<double> ks(p);
    // Reflections up to 0.75: high orders with near-unit reflections give
    // Toeplitz systems too ill-conditioned for any solver to agree to 1e-8.
    for (double &k : ks) k = rng.NextUniform(-0.75, 0.75);
    std::vector<double> r = AutocorrFromReflections(ks);

    auto lpc = spkid::LevinsonDurbin(r, p);

    std::vector<std::vector<double>> m(p, std::vector<double>(p));
    std::vector<double> rhs(p);
    for (int i = 0; i < p; ++i) {
      rhs[i] = r[i + 1];
      for (int j = 0; j < p; ++j) m[i][j] = r[std::abs(i - j)];
    }
    std::vector<double> dense = SolveDense(m, rhs);
    for (int i = 0; i < p; ++i) {
      double scale = std::max(1.0, std::fabs(dense[i]));
      CHECK(std::fabs(lpc.coeffs[i] - dense[i]) / scale < 1e-8);
    }
  }
}

TEST_CASE("Levinson-Durbin clamps unstable reflection coefficients") {
  auto res = spkid::LevinsonDurbin(std::vector<double>{1.0, 1.2}, 1);
  CHECK(res.clamped);
  CHECK(std::fabs(res.coeffs[0]) == doctest::Approx(0.999));
  CHECK_THROWS_AS(spkid::LevinsonDurbin(std::vector<double>{0.0, 0.0}, 1),
                  spkid::DegenerateFrameError);
}

TEST_CASE("Cepstrum recursion matches the one-pole closed form") {
  // For a single pole a, the model cepstrum is c_n = a^n / n.
  std::vector<double> lpc{0.6, 0.0, 0.0, 0.0, 0.0};
  auto c = spkid::LpcToCepstrum(lpc);
  REQUIRE(c.size() == 5);
  for (int n = 1; n <= 5; ++n)
    CHECK(c[n - 1] == doctest::Approx(std::pow(0.6, n) / n).epsilon(1e-12));
}

TEST_CASE("Cepstrum of the two-coefficient hand case") {
  auto c = spkid::LpcToCepstrum(std::vector<double>{0.5, 0.0});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c[1] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("Feature extraction is invariant to input gain") {
  spkid::Utterance utt = SynthUtterance(1.0);
  spkid::AnalysisConfig config;
  auto base = spkid::ExtractFeatures(utt, config);
  for (double gain : {0.1, 10.0}) {
    spkid::Utterance scaled = utt;
    for (double &v : scaled.samples) v *= gain;
    auto features = spkid::ExtractFeatures(scaled, config);
    REQUIRE(features.data.size() == base.data.size());
    for (size_t i = 0; i < base.data.size(); ++i)
      CHECK(std::fabs(features.data[i] - base.data[i]) < 1e-9);
  }
}

TEST_CASE("Feature extraction fills stats and drops the silence pads") {
  spkid::Utterance utt = SynthUtterance(1.0);
  spkid::AnalysisConfig config;
  spkid::ExtractStats stats;
  auto features = spkid::ExtractFeatures(utt, config, &stats);
  CHECK(features.dim == 12);
  CHECK(features.num_frames() > 0);
  CHECK(stats.frames_kept == features.num_frames());
  CHECK(stats.frames_kept < stats.frames_total);  // pads were removed
  CHECK_FALSE(stats.high_order);
}

TEST_CASE("Empty and dead utterances are rejected with context") {
  spkid::AnalysisConfig config;
  spkid::Utterance utt;
  utt.sample_rate = 8000;
  utt.speaker_id = "spk000";
  utt.task_id = "s1";
  CHECK_THROWS_AS(spkid::ExtractFeatures(utt, config),
                  spkid::EmptyUtteranceError);
  utt.samples.assign(4000, 0.0);
  CHECK_THROWS_AS(spkid::ExtractFeatures(utt, config),
                  spkid::EmptyUtteranceError);
}

TEST_CASE("Analysis config validation") {
  spkid::AnalysisConfig config;
  CHECK(config.Hop() == 80);
  CHECK_NOTHROW(config.Validate());
  CHECK_FALSE(config.HighOrder());

  config.lpc_order = 25;
  CHECK(config.HighOrder());
  CHECK_NOTHROW(config.Validate());

  config = spkid::AnalysisConfig();
  config.overlap_fraction = 0.37;  // hop 151.2 is not an integer
  CHECK_THROWS_AS(config.Validate(), spkid::UsageError);

  config = spkid::AnalysisConfig();
  config.preemphasis = 1.0;
  CHECK_THROWS_AS(config.Validate(), spkid::UsageError);

  config = spkid::AnalysisConfig();
  config.lpc_order = 240;
  CHECK_THROWS_AS(config.Validate(), spkid::UsageError);
}

TEST_CASE("Feature dump round-trips exactly") {
  spkid::Utterance utt = SynthUtterance(0.8);
  spkid::AnalysisConfig config;
  auto features = spkid::ExtractFeatures(utt, config);
  auto dir = std::filesystem::temp_directory_path() / "spkid-test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "features.tsv").string();
  spkid::WriteFeatureDump(path, features);
  auto loaded = spkid::ReadFeatureDump(path);
  CHECK(loaded.dim == features.dim);
  CHECK(loaded.data == features.data);
}
