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

#include "rirsynth/multiband.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "rirsynth/dsp.hpp"
#include "rirsynth/errors.hpp"
#include "rirsynth/metrics.hpp"

namespace rirsynth {
namespace {

ErrorCode ThrownCode(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

RirParams Band(double rt60, std::uint64_t seed = 7) {
  RirParams p;
  p.rt60 = rt60;
  p.edt = 0.05;
  p.itdg = 0.005;
  p.drr_target = -3.0;
  p.seed = seed;
  return p;
}

TEST(BandLayoutTest, OctaveEdges) {
  const std::vector<double> centers = {500.0, 1000.0};
  const auto layout = OctaveBands(centers);
  ASSERT_EQ(layout.bands.size(), 2u);
  EXPECT_NEAR(layout.bands[1].low_hz, 707.107, 1e-3);
  EXPECT_NEAR(layout.bands[1].high_hz, 1414.214, 1e-3);
  EXPECT_NEAR(layout.bands[0].center_hz(), 500.0, 1e-9);
  EXPECT_NEAR(layout.bands[0].high_hz, layout.bands[1].low_hz, 1e-9);
}

TEST(BandLayoutTest, ThirdOctaveEdges) {
  const std::vector<double> centers = {1000.0};
  const auto layout = ThirdOctaveBands(centers);
  EXPECT_NEAR(layout.bands[0].high_hz / layout.bands[0].low_hz, std::cbrt(2.0), 1e-12);
  EXPECT_NEAR(layout.bands[0].center_hz(), 1000.0, 1e-9);
}

TEST(BandLayoutTest, StandardLayoutsFitBelowNyquist) {
  for (std::uint32_t sr : {8000u, 16000u, 44100u, 48000u}) {
    for (const auto& layout : {StandardOctaveBands(sr), StandardThirdOctaveBands(sr)}) {
      ASSERT_FALSE(layout.bands.empty());
      EXPECT_NO_THROW(ValidateBandLayout(layout, sr));
      EXPECT_GE(layout.bands.front().center_hz(), 99.0);
    }
  }
  const auto octaves = StandardOctaveBands(16000);
  ASSERT_EQ(octaves.bands.size(), 6u);  // 125 .. 4000 Hz
  EXPECT_NEAR(octaves.bands.back().center_hz(), 4000.0, 1e-9);
}

TEST(BandLayoutTest, ValidationErrors) {
  EXPECT_EQ(ThrownCode([] { ValidateBandLayout({}, 16000); }),
            ErrorCode::kInvalidBandLayout);
  EXPECT_EQ(ThrownCode([] { ValidateBandLayout({{{100.0, 9000.0}}}, 16000); }),
            ErrorCode::kInvalidBandLayout);
  EXPECT_EQ(ThrownCode([] { ValidateBandLayout({{{200.0, 100.0}}}, 16000); }),
            ErrorCode::kInvalidBandLayout);
  EXPECT_EQ(ThrownCode([] {
              ValidateBandLayout({{{707.0, 1414.0}, {354.0, 707.0}}}, 16000);
            }),
            ErrorCode::kInvalidBandLayout);
}

TEST(GenerateMultibandRirTest, CountMismatch) {
  const std::vector<double> centers = {500.0, 2000.0};
  const std::vector<RirParams> params = {Band(0.5)};
  EXPECT_EQ(ThrownCode([&] { GenerateMultibandRir(params, OctaveBands(centers)); }),
            ErrorCode::kInvalidBandLayout);
}

TEST(GenerateMultibandRirTest, SampleRateMismatch) {
  const std::vector<double> centers = {500.0, 2000.0};
  std::vector<RirParams> params = {Band(0.5), Band(0.3)};
  params[1].sample_rate = 8000;
  EXPECT_EQ(ThrownCode([&] { GenerateMultibandRir(params, OctaveBands(centers)); }),
            ErrorCode::kInvalidBandLayout);
}

TEST(GenerateMultibandRirTest, PropagatesBandErrors) {
  const std::vector<double> centers = {500.0, 2000.0};
  std::vector<RirParams> params = {Band(0.5), Band(0.3)};
  params[1].edt = 0.4;
  try {
    GenerateMultibandRir(params, OctaveBands(centers));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
    EXPECT_NE(std::string(e.what()).find("band 1"), std::string::npos);
  }
}

TEST(GenerateMultibandRirTest, LengthAndDeterminism) {
  const std::vector<double> centers = {500.0, 2000.0};
  const std::vector<RirParams> params = {Band(0.6), Band(0.3)};
  const auto a = GenerateMultibandRir(params, OctaveBands(centers));
  const auto b = GenerateMultibandRir(params, OctaveBands(centers));
  EXPECT_EQ(a.amplitudes.size(), 9601u);  // longest band
  EXPECT_EQ(a.sample_rate, 16000u);
  EXPECT_EQ(a.amplitudes, b.amplitudes);
}

TEST(GenerateMultibandRirTest, EachBandKeepsItsOwnDecay) {
  // Band-limited decay ordering survives the sum: the low band rings longer.
  const std::vector<double> centers = {500.0, 2000.0};
  const auto layout = OctaveBands(centers);
  const std::vector<RirParams> params = {Band(0.6), Band(0.3)};
  const auto rir = GenerateMultibandRir(params, layout);
  std::vector<double> measured;
  for (const auto& band : layout.bands) {
    PressureImpulseResponse filtered{
        BandpassSamples(rir.amplitudes, rir.sample_rate, band.low_hz, band.high_hz),
        rir.sample_rate};
    measured.push_back(EstimateRt60(ComputeSchroederCurve(filtered)).seconds);
  }
  EXPECT_GT(measured[0], 1.5 * measured[1]);
}

TEST(GenerateMultibandRirTest, BandsUseConsecutiveSeeds) {
  const std::vector<double> centers = {500.0, 2000.0};
  const auto layout = OctaveBands(centers);
  const std::vector<RirParams> params = {Band(0.6, 40), Band(0.3, 40)};
  const auto rir = GenerateMultibandRir(params, layout);
  std::vector<double> expected(rir.amplitudes.size(), 0.0);
  for (std::size_t b = 0; b < 2; ++b) {
    RirParams p = params[b];
    p.seed = 40 + b;
    const auto band = BandpassSamples(ToPressure(GenerateRir(p)).amplitudes, 16000,
                                      layout.bands[b].low_hz, layout.bands[b].high_hz);
    for (std::size_t n = 0; n < band.size(); ++n) expected[n] += band[n];
  }
  for (std::size_t n = 0; n < expected.size(); ++n) {
    ASSERT_NEAR(rir.amplitudes[n], expected[n], 1e-12) << n;
  }
}

TEST(GenerateMultibandRirTest, TailEnergyConfinedToBand) {
  // Cutting the filtered response at n = 0 leaks some of the direct sound's
  // ringing out of band, so compare the tail past the first 50 ms.
  const std::vector<double> centers = {1000.0};
  const auto layout = OctaveBands(centers);
  const std::vector<RirParams> params = {Band(0.4)};
  const auto rir = GenerateMultibandRir(params, layout);
  const auto out_of_band = BandpassSamples(rir.amplitudes, 16000, 3000.0, 7000.0);
  double in = 0.0, out = 0.0;
  for (std::size_t n = 800; n < rir.amplitudes.size(); ++n) {
    in += rir.amplitudes[n] * rir.amplitudes[n];
    out += out_of_band[n] * out_of_band[n];
  }
  EXPECT_LT(10.0 * std::log10(out / in), -60.0);
}

}  // namespace
}  // namespace rirsynth
