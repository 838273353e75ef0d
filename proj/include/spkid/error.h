// spkid/error.h

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

#ifndef SPKID_ERROR_H_
#define SPKID_ERROR_H_

#include <stdexcept>
#include <string>

namespace spkid {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line usage or an invalid configuration value.
class UsageError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read, or written, or ended prematurely.
class IoError : public Error {
 public:
  using Error::Error;
};

// Text input (manifest, model file, feature dump) is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Audio file is readable but not in the supported encoding.
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// Utterance has no usable frames (too short, or all silence).
class EmptyUtteranceError : public Error {
 public:
  using Error::Error;
};

// A frame with no energy reached the prediction stage.
class DegenerateFrameError : public Error {
 public:
  using Error::Error;
};

// Not enough training observations for the requested model size.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Operands disagree on vector or matrix dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Codebooks cannot be combined (size, dimension, or speaker mismatch).
class CombineError : public Error {
 public:
  using Error::Error;
};

// Covariance matrix is singular even after regularization.
class SingularModelError : public Error {
 public:
  using Error::Error;
};

// Corpus does not cover what the evaluation protocol requires.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace spkid

#endif  // SPKID_ERROR_H_
