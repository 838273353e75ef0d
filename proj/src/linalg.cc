// src/linalg.cc

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

#include "spkid/linalg.h"

#include <cmath>

#include "spkid/error.h"

namespace spkid {

SquareMatrix SquareMatrix::Identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

double SquareMatrix::Trace() const {
  double trace = 0.0;
  for (int i = 0; i < n; ++i) trace += at(i, i);
  return trace;
}

bool CholeskyFactor(const SquareMatrix &matrix, SquareMatrix *factor,
                    double *min_pivot) {
  int n = matrix.n;
  *factor = SquareMatrix(n);
  double smallest = 0.0;
  bool have_pivot = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = matrix.at(i, j);
      for (int k = 0; k < j; ++k) acc -= factor->at(i, k) * factor->at(j, k);
      if (i == j) {
        if (!have_pivot || acc < smallest) {
          smallest = acc;
          have_pivot = true;
        }
        if (min_pivot != nullptr) *min_pivot = smallest;
        if (acc <= 0.0) return false;
        factor->at(i, j) = std::sqrt(acc);
      } else {
        factor->at(i, j) = acc / factor->at(j, j);
      }
    }
  }
  return true;
}

SquareMatrix CholeskyInverseFromFactor(const SquareMatrix &factor) {
  int n = factor.n;

  // Forward substitution, one unit-basis column at a time: L * v = e_j.
  SquareMatrix l_inv(n);
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      double acc = i == j ? 1.0 : 0.0;
      for (int k = j; k < i; ++k) acc -= factor.at(i, k) * l_inv.at(k, j);
      l_inv.at(i, j) = acc / factor.at(i, i);
    }
  }

  // A^-1 = L^-T * L^-1; only the lower triangle is formed explicitly.
  SquareMatrix inverse(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (int k = i; k < n; ++k) acc += l_inv.at(k, i) * l_inv.at(k, j);
      inverse.at(i, j) = acc;
      inverse.at(j, i) = acc;
    }
  }
  return inverse;
}

SpdInverseResult InvertSpd(const SquareMatrix &matrix) {
  if (matrix.n < 1) throw DimensionError("cannot invert an empty matrix");
  double trace = matrix.Trace();
  double scale = trace / matrix.n;
  double pivot_floor = 1e-10 * scale;

  SquareMatrix factor;
  double min_pivot = 0.0;
  bool ok = CholeskyFactor(matrix, &factor, &min_pivot);
  if (ok && min_pivot >= pivot_floor) {
    return {CholeskyInverseFromFactor(factor), false};
  }

  double eps = trace > 0.0 ? 1e-8 * scale : 1e-8;
  SquareMatrix ridged = matrix;
  for (int i = 0; i < ridged.n; ++i) ridged.at(i, i) += eps;
  ok = CholeskyFactor(ridged, &factor, &min_pivot);
  if (!ok || min_pivot <= 0.0)
    throw SingularModelError(
        "covariance is singular even after diagonal loading");
  return {CholeskyInverseFromFactor(factor), true};
}

}  // namespace spkid
