// Copyright 2026 The Hushwave Authors. All Rights Reserved.
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

#include "hushwave/wav.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>

#include "hushwave/errors.h"

namespace hushwave {
namespace {

std::uint32_t U32At(const std::vector<std::uint8_t>& b, std::size_t at) {
  return b[at] | (b[at + 1] << 8) | (b[at + 2] << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

TEST(Wav, HeaderLayout) {
  Waveform w{44100, {0.0, 0.5, -0.5}};
  const auto b = EncodeWav(w, WavFormat::kPcm16);
  ASSERT_EQ(b.size(), 44u + 6u);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "RIFF");
  EXPECT_EQ(U32At(b, 4), 36u + 6u);
  EXPECT_EQ(std::string(b.begin() + 8, b.begin() + 12), "WAVE");
  EXPECT_EQ(U32At(b, 24), 44100u);
  EXPECT_EQ(U32At(b, 40), 6u);
  // 0.5 full scale is 16384.
  EXPECT_EQ(b[46] | (b[47] << 8), 16384);
}

TEST(Wav, Float32RoundTripIsExactForFloatValues) {
  Waveform w{192000, {0.0, 0.25, -0.75, 1.5, 0.1f}};
  const Waveform r = DecodeWav(EncodeWav(w, WavFormat::kFloat32));
  EXPECT_EQ(r.sample_rate_hz, 192000);
  ASSERT_EQ(r.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(r.samples[i], w.samples[i]);
}

TEST(Wav, Pcm16RoundTripWithinQuantization) {
  Waveform w{48000, {}};
  for (int i = 0; i < 500; ++i) w.samples.push_back(0.9 * std::sin(0.01 * i));
  const Waveform r = DecodeWav(EncodeWav(w, WavFormat::kPcm16));
  EXPECT_EQ(r.sample_rate_hz, 48000);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(r.samples[i], w.samples[i], 0.5 / 32768.0 + 1e-12);
}

TEST(Wav, Pcm16Clips) {
  Waveform w{8000, {2.0, -2.0}};
  const Waveform r = DecodeWav(EncodeWav(w, WavFormat::kPcm16));
  EXPECT_NEAR(r.samples[0], 32767.0 / 32768.0, 1e-12);
  EXPECT_EQ(r.samples[1], -1.0);
}

TEST(Wav, RejectsMalformed) {
  Waveform w{8000, {0.1, 0.2}};
  auto b = EncodeWav(w, WavFormat::kPcm16);
  auto bad = b;
  std::memcpy(bad.data(), "RIFX", 4);
  EXPECT_THROW(DecodeWav(bad), FormatError);
  auto stereo = b;
  stereo[22] = 2;
  EXPECT_THROW(DecodeWav(stereo), FormatError);
  auto truncated = b;
  truncated.resize(b.size() - 1);
  EXPECT_THROW(DecodeWav(truncated), FormatError);
  EXPECT_THROW(DecodeWav(std::vector<std::uint8_t>(10, 0)), FormatError);
}

TEST(Wav, FileRoundTripAndMissingFile) {
  const auto path = std::filesystem::temp_directory_path() / "hushwave_wav_test.wav";
  Waveform w{16000, {0.5, -0.25}};
  WriteWav(path, w, WavFormat::kFloat32);
  EXPECT_EQ(ReadWav(path), w);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadWav(path), IoError);
}

}  // namespace
}  // namespace hushwave
