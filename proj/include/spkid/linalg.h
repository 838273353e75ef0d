// spkid/linalg.h

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

#ifndef SPKID_LINALG_H_
#define SPKID_LINALG_H_

#include <vector>

namespace spkid {

// Dense square matrix, row-major. Model orders stay small (tens), so a flat
// vector with explicit loops is all this project needs.
struct SquareMatrix {
  int n = 0;
  std::vector<double> a;

  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

  double &at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static SquareMatrix Identity(int dim);
  double Trace() const;
};

// Lower-triangular Cholesky factor of A. Returns false as soon as a pivot
// is non-positive; min_pivot (if non-null) receives the smallest pivot seen
// (the diagonal value before its square root).
bool CholeskyFactor(const SquareMatrix &matrix, SquareMatrix *factor,
                    double *min_pivot);

// A^-1 = L^-T L^-1 from the lower factor.
SquareMatrix CholeskyInverseFromFactor(const SquareMatrix &factor);

struct SpdInverseResult {
  SquareMatrix inverse;
  bool regularized = false;
};

// Inverse via Cholesky. If factorization fails or the smallest pivot is
// below 1e-10 * tr(C)/n, retries once with C + eps*I, eps = 1e-8 * tr(C)/n
// (absolute 1e-8 when the trace is not positive), and reports that the
// ridge was applied. Throws SingularModelError if the retry also fails.
SpdInverseResult InvertSpd(const SquareMatrix &matrix);

}  // namespace spkid

#endif  // SPKID_LINALG_H_
