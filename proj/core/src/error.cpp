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

#include "vsl/error.hpp"

namespace vsl {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::MixedFields: return "MixedFields";
    case Errc::InverseOfZero: return "InverseOfZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SingularConjugator: return "SingularConjugator";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::BadExponent: return "BadExponent";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::OddCardinality: return "OddCardinality";
    case Errc::NotTwoRegular: return "NotTwoRegular";
    case Errc::OddDegree: return "OddDegree";
    case Errc::IntertwinerCheckFailed: return "IntertwinerCheckFailed";
    case Errc::NonPrimitiveTrace: return "NonPrimitiveTrace";
    case Errc::WitnessSearchFailed: return "WitnessSearchFailed";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::InvalidMumford: return "InvalidMumford";
    case Errc::RootNotOnCurve: return "RootNotOnCurve";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::GroundFieldNotPrime: return "GroundFieldNotPrime";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace vsl
