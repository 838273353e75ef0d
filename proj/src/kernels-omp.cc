// src/kernels-omp.cc

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

#include <climits>
#include <cstddef>
#include <string>

#include "spkid/analysis.h"
#include "spkid/error.h"
#include "spkid/kernels.h"

namespace spkid {
namespace kernels {

#ifdef _OPENMP

// Exceptions must not escape a parallel region, so degenerate frames are
// recorded and the lowest index is rethrown afterwards, matching the serial
// version's first-failure report.

int LpccBatch_Omp(const std::vector<std::span<const double>> &frames,
                  std::span<const double> window, int order, double *out) {
  int num_frames = static_cast<int>(frames.size());
  int clamped = 0;
  long long bad = LLONG_MAX;
#pragma omp parallel for schedule(static) reduction(+ : clamped) \
    reduction(min : bad)
  for (int t = 0; t < num_frames; ++t) {
    try {
      if (ComputeFrameLpcc(frames[t], window, order,
                           out + static_cast<size_t>(t) * order))
        ++clamped;
    } catch (const DegenerateFrameError &) {
      bad = bad < t ? bad : t;
    }
  }
  if (bad != LLONG_MAX)
    throw DegenerateFrameError("zero-energy analysis frame at index " +
                               std::to_string(bad));
  return clamped;
}

void NearestCentroid_Omp(const double *features, int num_frames,
                         const double *centroids, int num_centroids, int dim,
                         double *min_dist, int *assign) {
#pragma omp parallel for schedule(static)
  for (int t = 0; t < num_frames; ++t) {
    const double *x = features + static_cast<size_t>(t) * dim;
    double best = 0.0;
    int best_index = -1;
    for (int c = 0; c < num_centroids; ++c) {
      const double *y = centroids + static_cast<size_t>(c) * dim;
      double dist = 0.0;
      for (int i = 0; i < dim; ++i) {
        double d = x[i] - y[i];
        dist += d * d;
      }
      if (best_index < 0 || dist < best) {
        best = dist;
        best_index = c;
      }
    }
    min_dist[t] = best;
    if (assign != nullptr) assign[t] = best_index;
  }
}

void CovarianceAccum_Omp(const double *features, int num_frames, int dim,
                         double *mean, double *cov) {
  for (int i = 0; i < dim; ++i) {
    mean[i] = 0.0;
    for (int j = 0; j < dim; ++j) cov[static_cast<size_t>(i) * dim + j] = 0.0;
  }
  if (num_frames < 1) return;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (int t = 0; t < num_frames; ++t)
      acc += features[static_cast<size_t>(t) * dim + i];
    mean[i] = acc / num_frames;
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (int t = 0; t < num_frames; ++t) {
        const double *x = features + static_cast<size_t>(t) * dim;
        acc += (x[i] - mean[i]) * (x[j] - mean[j]);
      }
      double value = acc / num_frames;
      cov[static_cast<size_t>(i) * dim + j] = value;
      cov[static_cast<size_t>(j) * dim + i] = value;
    }
  }
}

#else

int LpccBatch_Omp(const std::vector<std::span<const double>> &frames,
                  std::span<const double> window, int order, double *out) {
  return LpccBatch_Serial(frames, window, order, out);
}

void NearestCentroid_Omp(const double *features, int num_frames,
                         const double *centroids, int num_centroids, int dim,
                         double *min_dist, int *assign) {
  NearestCentroid_Serial(features, num_frames, centroids, num_centroids, dim,
                         min_dist, assign);
}

void CovarianceAccum_Omp(const double *features, int num_frames, int dim,
                         double *mean, double *cov) {
  CovarianceAccum_Serial(features, num_frames, dim, mean, cov);
}

#endif

int LpccBatch(const std::vector<std::span<const double>> &frames,
              std::span<const double> window, int order, double *out) {
  return LpccBatch_Omp(frames, window, order, out);
}

void NearestCentroid(const double *features, int num_frames,
                     const double *centroids, int num_centroids, int dim,
                     double *min_dist, int *assign) {
  NearestCentroid_Omp(features, num_frames, centroids, num_centroids, dim,
                      min_dist, assign);
}

void CovarianceAccum(const double *features, int num_frames, int dim,
                     double *mean, double *cov) {
  CovarianceAccum_Omp(features, num_frames, dim, mean, cov);
}

}  // namespace kernels
}  // namespace spkid
