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

#include "rirsynth/params.hpp"

#include <gtest/gtest.h>

#include "rirsynth/errors.hpp"

namespace rirsynth {
namespace {

RirParams Valid() {
  RirParams p;
  p.rt60 = 0.5;
  p.edt = 0.075;
  p.itdg = 0.005;
  p.drr_target = -3.0;
  p.sample_rate = 16000;
  return p;
}

ErrorCode CodeOf(const RirParams& p) {
  try {
    p.Validate();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected Validate() to throw";
  return ErrorCode::kIoError;
}

TEST(SecondsToSamplesTest, RoundsHalfUp) {
  EXPECT_EQ(SecondsToSamples(0.5, 16000), 8000u);
  EXPECT_EQ(SecondsToSamples(0.005, 16000), 80u);
  EXPECT_EQ(SecondsToSamples(2.5 / 1000.0, 1000), 3u);  // 2.5 samples
  EXPECT_EQ(SecondsToSamples(2.4 / 1000.0, 1000), 2u);
  EXPECT_EQ(SecondsToSamples(0.0, 16000), 0u);
  EXPECT_EQ(SecondsToSamples(-1.0, 16000), 0u);
}

TEST(RirParamsTest, DerivedSampleCounts) {
  const RirParams p = Valid();
  EXPECT_EQ(p.rt60_samples(), 8000u);
  EXPECT_EQ(p.edt_samples(), 1200u);
  EXPECT_EQ(p.itdg_samples(), 80u);
  EXPECT_EQ(p.length(), 8001u);
  EXPECT_NO_THROW(p.Validate());
}

TEST(RirParamsTest, RejectsEachInvariant) {
  auto p = Valid();
  p.rt60 = 0.0;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.edt = p.rt60;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.edt = 0.0;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.itdg = -0.001;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.itdg = 0.5 - 1.0 / 16000.0;  // g = l - 1
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.deviation_db = -1.0;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.sample_rate = 0;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.rt60 = 1.0 / 16000.0;  // l = 1
  p.edt = 0.5 / 16000.0;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);

  p = Valid();
  p.early_deletion_probability = 1.5;
  EXPECT_EQ(CodeOf(p), ErrorCode::kInvalidParams);
}

TEST(RirParamsTest, LargestGapLeavingOneDeletableRay) {
  auto p = Valid();
  p.itdg = (8000.0 - 2.0) / 16000.0;  // g = l - 2
  EXPECT_NO_THROW(p.Validate());
}

}  // namespace
}  // namespace rirsynth
