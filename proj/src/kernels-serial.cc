// src/kernels-serial.cc

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

#include <cstddef>
#include <string>

#include "spkid/analysis.h"
#include "spkid/error.h"
#include "spkid/kernels.h"

namespace spkid {
namespace kernels {

int LpccBatch_Serial(const std::vector<std::span<const double>> &frames,
                     std::span<const double> window, int order, double *out) {
  int clamped = 0;
  for (size_t t = 0; t < frames.size(); ++t) {
    try {
      if (ComputeFrameLpcc(frames[t], window, order,
                           out + t * static_cast<size_t>(order)))
        ++clamped;
    } catch (const DegenerateFrameError &) {
      throw DegenerateFrameError("zero-energy analysis frame at index " +
                                 std::to_string(t));
    }
  }
  return clamped;
}

void NearestCentroid_Serial(const double *features, int num_frames,
                            const double *centroids, int num_centroids,
                            int dim, double *min_dist, int *assign) {
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

void CovarianceAccum_Serial(const double *features, int num_frames, int dim,
                            double *mean, double *cov) {
  for (int i = 0; i < dim; ++i) {
    mean[i] = 0.0;
    for (int j = 0; j < dim; ++j) cov[static_cast<size_t>(i) * dim + j] = 0.0;
  }
  if (num_frames < 1) return;
  for (int i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (int t = 0; t < num_frames; ++t)
      acc += features[static_cast<size_t>(t) * dim + i];
    mean[i] = acc / num_frames;
  }
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

}  // namespace kernels
}  // namespace spkid
