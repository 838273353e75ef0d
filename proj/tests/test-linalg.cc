// tests/test-linalg.cc

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
#include <vector>

#include "doctest.h"
#include "spkid/error.h"
#include "spkid/linalg.h"
#include "spkid/rng.h"

namespace {

spkid::SquareMatrix RandomSpd(spkid::Rng *rng, int dim) {
  spkid::SquareMatrix m(dim);
  std::vector<double> basis(static_cast<size_t>(dim) * dim);
  for (double &v : basis) v = rng->NextGaussian();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k)
        acc += basis[i * dim + k] * basis[j * dim + k];
      m.at(i, j) = acc;
    }
  for (int i = 0; i < dim; ++i) m.at(i, i) += 0.1 * dim;
  return m;
}

}  // namespace

TEST_CASE("Cholesky factor reproduces the matrix") {
  spkid::Rng rng(17);
  spkid::SquareMatrix m = RandomSpd(&rng, 6);
  spkid::SquareMatrix L;
  double min_pivot = 0.0;
  REQUIRE(spkid::CholeskyFactor(m, &L, &min_pivot));
  CHECK(min_pivot > 0.0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 6; ++k) acc += L.at(i, k) * L.at(j, k);
      CHECK(acc == doctest::Approx(m.at(i, j)).epsilon(1e-10));
      if (j > i) CHECK(L.at(i, j) == 0.0);
    }
}

TEST_CASE("Cholesky factor rejects an indefinite matrix") {
  spkid::SquareMatrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  spkid::SquareMatrix L;
  double min_pivot = 0.0;
  CHECK_FALSE(spkid::CholeskyFactor(m, &L, &min_pivot));
}

TEST_CASE("SPD inverse multiplies back to the identity") {
  spkid::Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 1 + static_cast<int>(rng.NextInt(20));
    spkid::SquareMatrix m = RandomSpd(&rng, dim);
    spkid::SpdInverseResult result = spkid::InvertSpd(m);
    CHECK_FALSE(result.regularized);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        double acc = 0.0;
        for (int k = 0; k < dim; ++k)
          acc += m.at(i, k) * result.inverse.at(k, j);
        CHECK(std::fabs(acc - (i == j ? 1.0 : 0.0)) < 1e-8);
      }
  }
}

TEST_CASE("Inverse of the identity is the identity") {
  auto result = spkid::InvertSpd(spkid::SquareMatrix::Identity(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(result.inverse.at(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("A semi-definite matrix is rescued by the ridge") {
  spkid::SquareMatrix m(2);
  m.at(0, 0) = 1.0;  // second diagonal entry is exactly zero
  auto result = spkid::InvertSpd(m);
  CHECK(result.regularized);
  CHECK(result.inverse.at(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(result.inverse.at(1, 1) > 1e6);  // inverse of the tiny ridge
}

TEST_CASE("A hopeless matrix raises SingularModelError") {
  spkid::SquareMatrix negative(2);
  negative.at(0, 0) = 1.0;
  negative.at(1, 1) = -1.0;
  CHECK_THROWS_AS(spkid::InvertSpd(negative), spkid::SingularModelError);
}

TEST_CASE("Trace and identity helpers") {
  spkid::SquareMatrix m(3);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 2.5;
  m.at(2, 2) = -0.5;
  CHECK(m.Trace() == 3.0);
  auto eye = spkid::SquareMatrix::Identity(3);
  CHECK(eye.Trace() == 3.0);
  CHECK(eye.at(0, 1) == 0.0);
}
