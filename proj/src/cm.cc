// src/cm.cc

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

#include "spkid/cm.h"

#include <cmath>
#include <sstream>
#include <string>

#include "spkid/error.h"
#include "spkid/io-util.h"
#include "spkid/kernels.h"
#include "spkid/version.h"

namespace spkid {

CovarianceModel EstimateCovariance(const FeatureSequence &features) {
  int num_frames = features.num_frames();
  if (num_frames < 2)
    throw InsufficientDataError(
        "covariance estimation needs at least 2 frames, got " +
        std::to_string(num_frames));
  int dim = features.dim;
  CovarianceModel model;
  model.cov = SquareMatrix(dim);
  model.mean.assign(dim, 0.0);
  model.frame_count = num_frames;
  model.speaker_id = features.speaker_id;
  model.tag = TagFromLanguage(features.language);
  model.low_data = num_frames < dim;
  kernels::CovarianceAccum(features.data.data(), num_frames, dim,
                           model.mean.data(), model.cov.a.data());

  // Stored matrices are kept invertible: the ridge that InvertSpd would
  // apply on demand is baked in here once, so every later score of this
  // model sees the same matrix.
  double trace = model.cov.Trace();
  double scale = trace / dim;
  SquareMatrix factor;
  double min_pivot = 0.0;
  bool ok = CholeskyFactor(model.cov, &factor, &min_pivot);
  if (!ok || min_pivot < 1e-10 * scale) {
    double eps = trace > 0.0 ? 1e-8 * scale : 1e-8;
    for (int i = 0; i < dim; ++i) model.cov.at(i, i) += eps;
    model.regularized = true;
  }
  return model;
}

std::pair<double, double> TraceProduct(const SquareMatrix &y,
                                       const SquareMatrix &x,
                                       const SquareMatrix &x_inv,
                                       const SquareMatrix &y_inv) {
  int n = y.n;
  if (x.n != n || x_inv.n != n || y_inv.n != n)
    throw DimensionError("trace product needs matrices of one size");
  double trace_yx = 0.0;
  double trace_xy = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      trace_yx += 2.0 * y.at(i, j) * x_inv.at(i, j);
      trace_xy += 2.0 * x.at(i, j) * y_inv.at(i, j);
    }
    trace_yx += y.at(i, i) * x_inv.at(i, i);
    trace_xy += x.at(i, i) * y_inv.at(i, i);
  }
  return {trace_yx, trace_xy};
}

double Sphericity(const SquareMatrix &c_test, const SquareMatrix &c_model) {
  int m = c_test.n;
  if (c_model.n != m)
    throw DimensionError("sphericity needs matrices of one size");
  if (m < 1) throw DimensionError("sphericity needs a nonempty matrix");
  SquareMatrix inv_model = InvertSpd(c_model).inverse;
  SquareMatrix inv_test = InvertSpd(c_test).inverse;
  auto [trace_tm, trace_mt] = TraceProduct(c_test, c_model, inv_model,
                                           inv_test);
  return std::log(trace_tm * trace_mt) - 2.0 * std::log(m);
}

CmIdentifyResult IdentifyCm(const std::vector<CovarianceModel> &models,
                            const SquareMatrix &c_test) {
  if (models.empty()) throw UsageError("identification needs at least 1 model");
  int m = c_test.n;
  SquareMatrix inv_test = InvertSpd(c_test).inverse;
  CmIdentifyResult result;
  result.scores.reserve(models.size());
  double best = 0.0;
  for (const CovarianceModel &model : models) {
    if (model.dim() != m)
      throw DimensionError("model " + model.speaker_id + " has dimension " +
                           std::to_string(model.dim()) + ", test has " +
                           std::to_string(m));
    SquareMatrix inv_model = InvertSpd(model.cov).inverse;
    auto [trace_tm, trace_mt] = TraceProduct(c_test, model.cov, inv_model,
                                             inv_test);
    double mu = std::log(trace_tm * trace_mt) - 2.0 * std::log(m);
    result.scores.emplace_back(model.speaker_id, mu);
    if (result.speaker_id.empty() || mu < best ||
        (mu == best && model.speaker_id < result.speaker_id)) {
      best = mu;
      result.speaker_id = model.speaker_id;
    }
  }
  return result;
}

int64_t CountCmParameters(int dim) {
  if (dim < 1) throw UsageError("bad covariance parameter query");
  return (static_cast<int64_t>(dim) * dim + dim) / 2;
}

void WriteCmModel(const std::string &path, const CovarianceModel &model) {
  int dim = model.dim();
  std::ostringstream out;
  out << kCovarianceFormat << " P=" << dim << " frames=" << model.frame_count
      << " speaker=" << model.speaker_id << " lang=" << ModelTagName(model.tag)
      << '\n';
  for (int i = 0; i < dim; ++i) {
    if (i > 0) out << ' ';
    out << FormatDouble(model.mean[i]);
  }
  out << '\n';
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (j > 0) out << ' ';
      out << FormatDouble(model.cov.at(i, j));
    }
    out << '\n';
  }
  WriteTextFile(path, out.str());
}

CovarianceModel ReadCmModel(const std::string &path) {
  std::vector<std::string> lines = SplitLines(ReadTextFile(path));
  if (lines.empty()) throw ParseError(path + ": empty model file");
  std::vector<std::string> fields = SplitChar(lines[0], ' ');
  if (fields.size() != 6 || fields[0] + " " + fields[1] != kCovarianceFormat)
    throw ParseError(path + ": not a '" + std::string(kCovarianceFormat) +
                     "' model file");
  int dim = static_cast<int>(ParseInt(KeyedValue(fields[2], "P", path), path));
  CovarianceModel model;
  model.frame_count =
      static_cast<int>(ParseInt(KeyedValue(fields[3], "frames", path), path));
  model.speaker_id = KeyedValue(fields[4], "speaker", path);
  model.tag = ParseModelTag(KeyedValue(fields[5], "lang", path), path);
  if (dim < 1 || model.frame_count < 0)
    throw ParseError(path + ": bad model header");
  if (static_cast<int>(lines.size()) < dim + 2)
    throw ParseError(path + ": truncated model file");

  std::vector<std::string> mean = SplitChar(lines[1], ' ');
  if (static_cast<int>(mean.size()) != dim)
    throw ParseError(path + ":2: expected " + std::to_string(dim) +
                     " mean values, got " + std::to_string(mean.size()));
  for (const std::string &value : mean)
    model.mean.push_back(ParseDouble(value, path + ":2"));

  model.cov = SquareMatrix(dim);
  for (int i = 0; i < dim; ++i) {
    std::string context = path + ":" + std::to_string(i + 3);
    std::vector<std::string> row = SplitChar(lines[i + 2], ' ');
    if (static_cast<int>(row.size()) != i + 1)
      throw ParseError(context + ": expected " + std::to_string(i + 1) +
                       " values, got " + std::to_string(row.size()));
    for (int j = 0; j <= i; ++j) {
      double value = ParseDouble(row[j], context);
      model.cov.at(i, j) = value;
      model.cov.at(j, i) = value;
    }
  }
  model.low_data = model.frame_count < dim;
  return model;
}

}  // namespace spkid
