// Copyright 2026 The bsfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bsf {

enum class ErrorKind {
    kValidation,
    kParamOutOfRange,
    kNotHermitian,
    kConvergenceFailure,
    kVanishingEnsemble,
    kNoSolution,
    kNoFeasiblePoint,
};

const char *error_kind_name(ErrorKind kind);

/// Base of every error raised by the library. `kind()` lets front ends map
/// failures onto exit codes without string matching.
/// Compact number text for diagnostics (printf %.6g).
inline std::string error_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// A matrix or parameter failed one of the density-matrix invariants.
class ValidationError : public Error {
   public:
    explicit ValidationError(const std::string &what) : Error(ErrorKind::kValidation, what) {}
    ValidationError(ErrorKind kind, const std::string &what) : Error(kind, what) {}
};

class ParamOutOfRange : public ValidationError {
   public:
    explicit ParamOutOfRange(const std::string &what) : ValidationError(ErrorKind::kParamOutOfRange, what) {}
};

class NotHermitian : public ValidationError {
   public:
    explicit NotHermitian(const std::string &what) : ValidationError(ErrorKind::kNotHermitian, what) {}
};

class ConvergenceFailure : public Error {
   public:
    explicit ConvergenceFailure(const std::string &what) : Error(ErrorKind::kConvergenceFailure, what) {}
};

/// The post-selected subensemble has (numerically) zero weight.
class VanishingEnsemble : public Error {
   public:
    explicit VanishingEnsemble(const std::string &what) : Error(ErrorKind::kVanishingEnsemble, what) {}
};

class NoSolution : public Error {
   public:
    explicit NoSolution(const std::string &what) : Error(ErrorKind::kNoSolution, what) {}
};

class NoFeasiblePoint : public Error {
   public:
    explicit NoFeasiblePoint(const std::string &what) : Error(ErrorKind::kNoFeasiblePoint, what) {}
};

}  // namespace bsf
