// spkid/kernels.h

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

#ifndef SPKID_KERNELS_H_
#define SPKID_KERNELS_H_

#include <span>
#include <vector>

namespace spkid {
namespace kernels {

// The hot inner loops, each in a serial reference version and an OpenMP
// version. Both produce bit-identical results for the same inputs: parallel
// loops run over independent output elements, and every reduction keeps its
// serial accumulation order (per output element, ascending frame index).
// The *_Omp functions fall back to the serial loops when built without
// OpenMP. The unqualified names dispatch to OpenMP when available.

// Per-frame LPCC analysis over pre-cut frames. `out` receives one row of
// `order` coefficients per frame; returns the number of frames whose
// reflection-coefficient guard fired.
int LpccBatch_Serial(const std::vector<std::span<const double>> &frames,
                     std::span<const double> window, int order, double *out);
int LpccBatch_Omp(const std::vector<std::span<const double>> &frames,
                  std::span<const double> window, int order, double *out);
int LpccBatch(const std::vector<std::span<const double>> &frames,
              std::span<const double> window, int order, double *out);

// For each of the `num_frames` rows of `features`, the squared Euclidean
// distance to the nearest of the `num_centroids` rows of `centroids`, and
// optionally (when `assign` is non-null) the index of that centroid. Lowest
// index wins distance ties.
void NearestCentroid_Serial(const double *features, int num_frames,
                            const double *centroids, int num_centroids,
                            int dim, double *min_dist, int *assign);
void NearestCentroid_Omp(const double *features, int num_frames,
                         const double *centroids, int num_centroids, int dim,
                         double *min_dist, int *assign);
void NearestCentroid(const double *features, int num_frames,
                     const double *centroids, int num_centroids, int dim,
                     double *min_dist, int *assign);

// Mean vector and mean-subtracted sample covariance with divisor N over the
// `num_frames` rows of `features`. `mean` has dim entries, `cov` dim*dim
// (row-major, exactly symmetric by construction).
void CovarianceAccum_Serial(const double *features, int num_frames, int dim,
                            double *mean, double *cov);
void CovarianceAccum_Omp(const double *features, int num_frames, int dim,
                         double *mean, double *cov);
void CovarianceAccum(const double *features, int num_frames, int dim,
                     double *mean, double *cov);

}  // namespace kernels
}  // namespace spkid

#endif  // SPKID_KERNELS_H_
