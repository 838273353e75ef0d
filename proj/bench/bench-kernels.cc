// bench/bench-kernels.cc

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

// Times the serial reference kernels against their OpenMP versions and
// cross-checks that both produce bit-identical output. Build target
// spkid-bench; not part of the test suite.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spkid/analysis.h"
#include "spkid/kernels.h"
#include "spkid/rng.h"

namespace {

double BestOfMs(const std::function<void()> &fn, int repetitions) {
  double best = 1e300;
  for (int rep = 0; rep < repetitions; ++rep) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (ms < best) best = ms;
  }
  return best;
}

int g_failures = 0;

void Report(const char *kernel, int n, double serial_ms, double omp_ms,
            bool identical) {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("%-18s %9d %12.2f %12.2f %9.2fx %8d  %s\n", kernel, n, serial_ms,
              omp_ms, serial_ms / omp_ms, threads,
              identical ? "bit-identical" : "MISMATCH");
  if (!identical) ++g_failures;
}

void BenchLpccBatch(int num_frames) {
  const int frame_length = 240;
  const int hop = 80;
  const int order = 12;
  spkid::Rng rng(1);
  std::vector<double> signal(
      static_cast<size_t>(num_frames - 1) * hop + frame_length);
  for (double &s : signal) s = rng.NextGaussian();
  std::vector<std::span<const double>> frames =
      spkid::FrameSignal(signal, frame_length, hop);
  std::vector<double> window = spkid::HammingWindow(frame_length);

  std::vector<double> serial_out(frames.size() * order);
  std::vector<double> omp_out(frames.size() * order);
  double serial_ms = BestOfMs(
      [&] {
        spkid::kernels::LpccBatch_Serial(frames, window, order,
                                         serial_out.data());
      },
      3);
  double omp_ms = BestOfMs(
      [&] {
        spkid::kernels::LpccBatch_Omp(frames, window, order, omp_out.data());
      },
      3);
  Report("lpcc_batch", static_cast<int>(frames.size()), serial_ms, omp_ms,
         serial_out == omp_out);
}

void BenchNearestCentroid(int num_frames) {
  const int dim = 12;
  const int num_centroids = 256;
  spkid::Rng rng(2);
  std::vector<double> features(static_cast<size_t>(num_frames) * dim);
  std::vector<double> centroids(static_cast<size_t>(num_centroids) * dim);
  for (double &v : features) v = rng.NextGaussian();
  for (double &v : centroids) v = rng.NextGaussian();

  std::vector<double> serial_dist(num_frames), omp_dist(num_frames);
  std::vector<int> serial_assign(num_frames), omp_assign(num_frames);
  double serial_ms = BestOfMs(
      [&] {
        spkid::kernels::NearestCentroid_Serial(features.data(), num_frames,
                                               centroids.data(), num_centroids,
                                               dim, serial_dist.data(),
                                               serial_assign.data());
      },
      3);
  double omp_ms = BestOfMs(
      [&] {
        spkid::kernels::NearestCentroid_Omp(features.data(), num_frames,
                                            centroids.data(), num_centroids,
                                            dim, omp_dist.data(),
                                            omp_assign.data());
      },
      3);
  Report("nearest_centroid", num_frames, serial_ms, omp_ms,
         serial_dist == omp_dist && serial_assign == omp_assign);
}

void BenchCovarianceAccum(int num_frames) {
  const int dim = 20;
  spkid::Rng rng(3);
  std::vector<double> features(static_cast<size_t>(num_frames) * dim);
  for (double &v : features) v = rng.NextGaussian();

  std::vector<double> serial_mean(dim), omp_mean(dim);
  std::vector<double> serial_cov(dim * dim), omp_cov(dim * dim);
  double serial_ms = BestOfMs(
      [&] {
        spkid::kernels::CovarianceAccum_Serial(features.data(), num_frames,
                                               dim, serial_mean.data(),
                                               serial_cov.data());
      },
      3);
  double omp_ms = BestOfMs(
      [&] {
        spkid::kernels::CovarianceAccum_Omp(features.data(), num_frames, dim,
                                            omp_mean.data(), omp_cov.data());
      },
      3);
  Report("covariance_accum", num_frames, serial_ms, omp_ms,
         serial_mean == omp_mean && serial_cov == omp_cov);
}

}  // namespace

int main() {
  std::printf("%-18s %9s %12s %12s %9s %8s\n", "kernel", "n", "serial_ms",
              "omp_ms", "speedup", "threads");
  BenchLpccBatch(2000);
  BenchLpccBatch(8000);
  BenchNearestCentroid(20000);
  BenchNearestCentroid(100000);
  BenchCovarianceAccum(50000);
  BenchCovarianceAccum(200000);
  return g_failures == 0 ? 0 : 1;
}
