// Copyright 2026 The trotterbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace trotterbench {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or malformed input files; maps to CLI exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Numerical precondition failures; maps to CLI exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonHermitianError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonUnitaryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An eigenphase of a step unitary reached the principal-branch cut.
class AliasingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateTarget : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The tracked effective eigenvector overlaps the exact one by < 0.5.
class AmbiguousMatch : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonEigenvectorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InsufficientPoints : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConditionViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FractionMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class LabelError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// The W2 coefficient system has no real root for the requested a4.
/// Maps to CLI exit code 3.
class NoRealSolution : public Error {
 public:
  using Error::Error;
};

class BranchOutOfRange : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace trotterbench
