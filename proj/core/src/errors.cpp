// Copyright 2026 The rirsynth Authors. All Rights Reserved.
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

#include "rirsynth/errors.hpp"

namespace rirsynth {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInfeasibleDrr: return "InfeasibleDrr";
    case ErrorCode::kExhaustedRays: return "ExhaustedRays";
    case ErrorCode::kInvalidBandLayout: return "InvalidBandLayout";
    case ErrorCode::kSilentInput: return "SilentInput";
    case ErrorCode::kInsufficientDecay: return "InsufficientDecay";
    case ErrorCode::kNoReverberantEnergy: return "NoReverberantEnergy";
    case ErrorCode::kNoReflectionFound: return "NoReflectionFound";
    case ErrorCode::kSampleRateMismatch: return "SampleRateMismatch";
    case ErrorCode::kInvalidBandEdges: return "InvalidBandEdges";
    case ErrorCode::kNonFiniteSample: return "NonFiniteSample";
    case ErrorCode::kInvalidRanges: return "InvalidRanges";
    case ErrorCode::kUnsatisfiableRanges: return "UnsatisfiableRanges";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kClippingError: return "ClippingError";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kCorruptFile: return "CorruptFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ToString(code)) + ": " + message),
      code_(code) {}

}  // namespace rirsynth
