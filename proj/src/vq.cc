// src/vq.cc

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

#include "spkid/vq.h"

#include <numeric>
#include <sstream>
#include <string>

#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/kernels.h"
#include "spkid/rng.h"
#include "spkid/version.h"

namespace spkid {

namespace {

void LloydRefine(const FeatureSequence &features, int iterations,
                 Codebook *codebook) {
  int num_frames = features.num_frames();
  int count = codebook->count();
  int dim = codebook->dim;
  std::vector<double> min_dist(num_frames);
  std::vector<int> assign(num_frames);
  std::vector<double> sums(static_cast<size_t>(count) * dim);
  std::vector<int> members(count);
  for (int it = 0; it < iterations; ++it) {
    kernels::NearestCentroid(features.data.data(), num_frames,
                             codebook->centroids.data(), count, dim,
                             min_dist.data(), assign.data());
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(members.begin(), members.end(), 0);
    for (int t = 0; t < num_frames; ++t) {
      double *sum = sums.data() + static_cast<size_t>(assign[t]) * dim;
      std::span<const double> frame = features.frame(t);
      for (int i = 0; i < dim; ++i) sum[i] += frame[i];
      ++members[assign[t]];
    }
    for (int c = 0; c < count; ++c) {
      if (members[c] == 0) continue;  // empty cell keeps its centroid
      double *centroid = codebook->centroids.data() +
                         static_cast<size_t>(c) * dim;
      const double *sum = sums.data() + static_cast<size_t>(c) * dim;
      for (int i = 0; i < dim; ++i) centroid[i] = sum[i] / members[c];
    }
  }
}

}  // namespace

Codebook TrainCodebookRandom(const FeatureSequence &features, int bits,
                             uint64_t seed, int lloyd_iterations) {
  if (bits < 0 || bits > 24)
    throw UsageError("codebook bits must be in 0..24, got " +
                     std::to_string(bits));
  if (features.dim < 1)
    throw DimensionError("cannot train a codebook on empty features");
  int count = 1 << bits;
  int num_frames = features.num_frames();
  if (num_frames < count)
    throw InsufficientDataError(
        "codebook of " + std::to_string(count) + " centroids needs at least " +
        std::to_string(count) + " training vectors, got " +
        std::to_string(num_frames));

  Codebook codebook;
  codebook.dim = features.dim;
  codebook.bits = bits;
  codebook.speaker_id = features.speaker_id;
  codebook.tag = TagFromLanguage(features.language);
  codebook.seed = seed;
  codebook.centroids.reserve(static_cast<size_t>(count) * features.dim);

  Rng rng(seed);
  std::vector<int> index(num_frames);
  std::iota(index.begin(), index.end(), 0);
  for (int i = 0; i < count; ++i) {
    int j = i + rng.NextInt(num_frames - i);
    std::swap(index[i], index[j]);
    std::span<const double> frame = features.frame(index[i]);
    codebook.centroids.insert(codebook.centroids.end(), frame.begin(),
                              frame.end());
  }
  if (lloyd_iterations > 0) LloydRefine(features, lloyd_iterations, &codebook);
  return codebook;
}

double QuantizeDistortion(const FeatureSequence &features,
                          const Codebook &codebook) {
  if (features.num_frames() < 1)
    throw EmptyUtteranceError("cannot quantize an empty feature sequence");
  if (features.dim != codebook.dim)
    throw DimensionError("feature dimension " + std::to_string(features.dim) +
                         " does not match codebook dimension " +
                         std::to_string(codebook.dim));
  int num_frames = features.num_frames();
  std::vector<double> min_dist(num_frames);
  kernels::NearestCentroid(features.data.data(), num_frames,
                           codebook.centroids.data(), codebook.count(),
                           codebook.dim, min_dist.data(), nullptr);
  double total = 0.0;
  for (double d : min_dist) total += d;
  return total / num_frames;
}

Codebook CombineCodebooks(const Codebook &a, const Codebook &b) {
  if (a.bits != b.bits)
    throw CombineError("cannot combine codebooks of different sizes");
  if (a.dim != b.dim)
    throw CombineError("cannot combine codebooks of different dimensions");
  if (a.speaker_id != b.speaker_id)
    throw CombineError("cannot combine codebooks of different speakers");
  Codebook combined;
  combined.dim = a.dim;
  combined.bits = a.bits;
  combined.speaker_id = a.speaker_id;
  combined.tag = ModelTag::kCombined;
  combined.seed = a.seed;
  combined.centroids = a.centroids;
  combined.centroids.insert(combined.centroids.end(), b.centroids.begin(),
                            b.centroids.end());
  return combined;
}

VqIdentifyResult IdentifyVq(const std::vector<Codebook> &models,
                            const FeatureSequence &features) {
  if (models.empty()) throw UsageError("identification needs at least 1 model");
  VqIdentifyResult result;
  result.scores.reserve(models.size());
  double best = 0.0;
  for (const Codebook &model : models) {
    double distortion = QuantizeDistortion(features, model);
    result.scores.emplace_back(model.speaker_id, distortion);
    if (result.speaker_id.empty() || distortion < best ||
        (distortion == best && model.speaker_id < result.speaker_id)) {
      best = distortion;
      result.speaker_id = model.speaker_id;
    }
  }
  return result;
}

int64_t CountVqParameters(int bits, int dim) {
  if (bits < 0 || bits > 62 || dim < 1)
    throw UsageError("bad codebook parameter query");
  return (int64_t{1} << bits) * dim;
}

void WriteCodebook(const std::string &path, const Codebook &codebook) {
  std::ostringstream out;
  out << kCodebookFormat << " P=" << codebook.dim << " No=" << codebook.bits
      << " count=" << codebook.count() << " speaker=" << codebook.speaker_id
      << " lang=" << ModelTagName(codebook.tag) << " seed=" << codebook.seed
      << '\n';
  for (int c = 0; c < codebook.count(); ++c) {
    const double *row = codebook.centroids.data() +
                        static_cast<size_t>(c) * codebook.dim;
    for (int i = 0; i < codebook.dim; ++i) {
      if (i > 0) out << ' ';
      out << FormatDouble(row[i]);
    }
    out << '\n';
  }
  WriteTextFile(path, out.str());
}

Codebook ReadCodebook(const std::string &path) {
  std::vector<std::string> lines = SplitLines(ReadTextFile(path));
  if (lines.empty()) throw ParseError(path + ": empty model file");
  std::vector<std::string> fields = SplitChar(lines[0], ' ');
  if (fields.size() != 8 || fields[0] + " " + fields[1] != kCodebookFormat)
    throw ParseError(path + ": not a '" + std::string(kCodebookFormat) +
                     "' model file");
  Codebook codebook;
  codebook.dim =
      static_cast<int>(ParseInt(KeyedValue(fields[2], "P", path), path));
  codebook.bits =
      static_cast<int>(ParseInt(KeyedValue(fields[3], "No", path), path));
  int count =
      static_cast<int>(ParseInt(KeyedValue(fields[4], "count", path), path));
  codebook.speaker_id = KeyedValue(fields[5], "speaker", path);
  codebook.tag = ParseModelTag(KeyedValue(fields[6], "lang", path), path);
  codebook.seed = ParseUint(KeyedValue(fields[7], "seed", path), path);
  if (codebook.dim < 1 || count < 1 || codebook.bits < 0)
    throw ParseError(path + ": bad codebook header");
  codebook.centroids.reserve(static_cast<size_t>(count) * codebook.dim);
  int rows = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::string context = path + ":" + std::to_string(i + 1);
    std::vector<std::string> values = SplitChar(lines[i], ' ');
    if (static_cast<int>(values.size()) != codebook.dim)
      throw ParseError(context + ": expected " + std::to_string(codebook.dim) +
                       " values, got " + std::to_string(values.size()));
    for (const std::string &value : values)
      codebook.centroids.push_back(ParseDouble(value, context));
    ++rows;
  }
  if (rows != count)
    throw ParseError(path + ": header promises " + std::to_string(count) +
                     " centroids, file has " + std::to_string(rows));
  return codebook;
}

}  // namespace spkid
