// Copyright 2026 The vsimple Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsl {

/// Failure categories raised across the library. Every public operation
/// reports contract violations by throwing vsl::Error with one of these.
enum class Errc {
  // ff
  NonPrimeCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  MixedFields,
  InverseOfZero,
  ZeroElement,
  OddCharacteristic,
  // shared shape errors
  ShapeMismatch,
  LengthMismatch,
  // f2linalg
  SingularConjugator,
  // permgrp / groups
  PointOutOfRange,
  FieldTooSmall,
  BadExponent,
  ZeroLambda,
  ValidationFailed,
  DegreeTooSmall,
  // permmod
  OddCardinality,
  NotTwoRegular,
  OddDegree,
  IntertwinerCheckFailed,
  // repcheck
  NonPrimitiveTrace,
  WitnessSearchFailed,
  DimensionTooLarge,
  // hyperjac
  EvenCharacteristic,
  NotSquarefree,
  InvalidMumford,
  RootNotOnCurve,
  VerificationFailed,
  GroundFieldNotPrime,
  // generic
  InvalidInput,
  Unsupported,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vsl
