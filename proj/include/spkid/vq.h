// spkid/vq.h

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

#ifndef SPKID_VQ_H_
#define SPKID_VQ_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spkid/types.h"

namespace spkid {

// Vector-quantization speaker model: 2^bits centroids of dimension dim
// (2 * 2^bits for a combined book, where bits is the per-component size).
struct Codebook {
  int dim = 0;
  int bits = 0;
  std::string speaker_id;
  ModelTag tag = ModelTag::kA;
  uint64_t seed = 0;
  std::vector<double> centroids;  // count() rows of dim values

  int count() const {
    return dim == 0 ? 0 : static_cast<int>(centroids.size()) / dim;
  }
};

// Codebook training by random selection: the centroids are 2^bits training
// vectors sampled uniformly without replacement from the seeded stream.
// lloyd_iterations > 0 refines them with that many Lloyd passes (off by
// default). Throws InsufficientDataError with fewer than 2^bits vectors.
Codebook TrainCodebookRandom(const FeatureSequence &features, int bits,
                             uint64_t seed, int lloyd_iterations = 0);

// Mean over frames of the squared Euclidean distance to the nearest
// centroid. Throws on empty features or dimension mismatch.
double QuantizeDistortion(const FeatureSequence &features,
                          const Codebook &codebook);

// Concatenation of the two equal-size books of one speaker (a's centroids
// first), giving a combined book of doubled size.
Codebook CombineCodebooks(const Codebook &a, const Codebook &b);

struct VqIdentifyResult {
  std::string speaker_id;  // argmin distortion, ties to lowest speaker_id
  std::vector<std::pair<std::string, double>> scores;  // model order
};

VqIdentifyResult IdentifyVq(const std::vector<Codebook> &models,
                            const FeatureSequence &features);

// 2^bits * dim stored values per model.
int64_t CountVqParameters(int bits, int dim);

// Text format, round-trip exact:
//   vqcb v1 P=<P> No=<No> count=<n> speaker=<id> lang=<tag> seed=<seed>
// followed by n lines of P space-separated floats.
void WriteCodebook(const std::string &path, const Codebook &codebook);
Codebook ReadCodebook(const std::string &path);

}  // namespace spkid

#endif  // SPKID_VQ_H_
