// spkid/cm.h

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

#ifndef SPKID_CM_H_
#define SPKID_CM_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spkid/linalg.h"
#include "spkid/types.h"

namespace spkid {

// Covariance speaker model: mean-subtracted sample covariance of the LPCC
// frames. Only the (P^2 + P)/2 lower-triangle values count as parameters.
struct CovarianceModel {
  SquareMatrix cov;
  std::vector<double> mean;
  int frame_count = 0;
  std::string speaker_id;
  ModelTag tag = ModelTag::kA;
  bool regularized = false;   // ridge was needed to make cov positive definite
  bool low_data = false;      // fewer frames than dimensions

  int dim() const { return cov.n; }
};

// Divisor-N sample covariance; needs at least 2 frames. The matrix is made
// positive definite with the InvertSpd ridge rule if necessary.
CovarianceModel EstimateCovariance(const FeatureSequence &features);

// Both traces by the symmetric-pairs identity
//   tr(Y X^-1) = 2 sum_{i>j} y_ij x~_ij + sum_k y_kk x~_kk
// (x~ the elements of X^-1), with no matrix product. Returns
// (tr(Y X^-1), tr(X Y^-1)).
std::pair<double, double> TraceProduct(const SquareMatrix &y,
                                       const SquareMatrix &x,
                                       const SquareMatrix &x_inv,
                                       const SquareMatrix &y_inv);

// Arithmetic-harmonic sphericity
//   mu = log[tr(C_test C_j^-1) tr(C_j C_test^-1)] - 2 log(m),
// natural log. Zero iff the matrices are proportional; symmetric in its
// arguments by construction.
double Sphericity(const SquareMatrix &c_test, const SquareMatrix &c_model);

struct CmIdentifyResult {
  std::string speaker_id;  // argmin mu, ties to lowest speaker_id
  std::vector<std::pair<std::string, double>> scores;  // model order
};

CmIdentifyResult IdentifyCm(const std::vector<CovarianceModel> &models,
                            const SquareMatrix &c_test);

// (P^2 + P)/2, the stored size of a symmetric P x P matrix.
int64_t CountCmParameters(int dim);

// Text format, round-trip exact:
//   cmmodel v1 P=<P> frames=<N> speaker=<id> lang=<tag>
// then the mean (P floats) and the P lower-triangle rows (row i has i+1
// floats).
void WriteCmModel(const std::string &path, const CovarianceModel &model);
CovarianceModel ReadCmModel(const std::string &path);

}  // namespace spkid

#endif  // SPKID_CM_H_
