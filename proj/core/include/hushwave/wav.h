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

#ifndef HUSHWAVE_WAV_H_
#define HUSHWAVE_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hushwave/waveform.h"

namespace hushwave {

enum class WavFormat { kPcm16, kFloat32 };

// Mono RIFF/WAVE. PCM16 samples are scaled by 1/32768 on read and rounded
// and clipped to [-32768, 32767] on write.
std::vector<std::uint8_t> EncodeWav(const Waveform& w, WavFormat format);
Waveform DecodeWav(std::span<const std::uint8_t> bytes);

void WriteWav(const std::filesystem::path& path, const Waveform& w, WavFormat format);
Waveform ReadWav(const std::filesystem::path& path);

}  // namespace hushwave

#endif  // HUSHWAVE_WAV_H_
