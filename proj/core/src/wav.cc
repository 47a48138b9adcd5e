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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string_view>

#include "hushwave/errors.h"

namespace hushwave {
namespace {

constexpr std::uint16_t kTagPcm = 1;
constexpr std::uint16_t kTagFloat = 3;

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutTag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool has(std::size_t n) const { return pos_ + n <= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

  std::uint16_t U16() {
    Need(2);
    const std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t U32() {
    Need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::string_view Tag() {
    Need(4);
    std::string_view t(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return t;
  }

 private:
  void Need(std::size_t n) const {
    if (!has(n)) throw FormatError("WAV data truncated");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> EncodeWav(const Waveform& w, WavFormat format) {
  w.Validate();
  const std::uint16_t bits = format == WavFormat::kPcm16 ? 16 : 32;
  const std::uint16_t block = bits / 8;
  const auto data_bytes = static_cast<std::uint32_t>(w.size() * block);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_bytes);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, format == WavFormat::kPcm16 ? kTagPcm : kTagFloat);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(w.sample_rate_hz));
  PutU32(out, static_cast<std::uint32_t>(w.sample_rate_hz) * block);
  PutU16(out, block);
  PutU16(out, bits);
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (double s : w.samples) {
    if (format == WavFormat::kPcm16) {
      const double scaled = std::clamp(std::round(s * 32768.0), -32768.0, 32767.0);
      PutU16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
    } else {
      PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(s)));
    }
  }
  return out;
}

Waveform DecodeWav(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  if (r.Tag() != "RIFF") throw FormatError("not a RIFF file");
  r.U32();
  if (r.Tag() != "WAVE") throw FormatError("RIFF file is not WAVE");

  std::uint16_t tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  while (r.has(8)) {
    const std::string_view id = r.Tag();
    const std::uint32_t size = r.U32();
    const std::size_t body = r.pos();
    if (id == "fmt ") {
      if (size < 16) throw FormatError("fmt chunk too short");
      tag = r.U16();
      channels = r.U16();
      rate = r.U32();
      r.U32();
      r.U16();
      bits = r.U16();
      if (tag == 0xFFFE && size >= 40) {
        // WAVE_FORMAT_EXTENSIBLE: the subformat GUID starts with the tag.
        r.seek(body + 24);
        tag = r.U16();
      }
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk");
      if (channels != 1) throw FormatError("only mono WAV is supported");
      if (rate == 0) throw FormatError("WAV sample rate is zero");
      const bool pcm16 = tag == kTagPcm && bits == 16;
      const bool f32 = tag == kTagFloat && bits == 32;
      if (!pcm16 && !f32) {
        throw FormatError("WAV must be 16-bit PCM or 32-bit float");
      }
      if (!r.has(size)) throw FormatError("WAV data truncated");
      Waveform w;
      w.sample_rate_hz = static_cast<int>(rate);
      const std::size_t count = size / (bits / 8);
      w.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        if (pcm16) {
          w.samples[i] = static_cast<std::int16_t>(r.U16()) / 32768.0;
        } else {
          w.samples[i] = std::bit_cast<float>(r.U32());
        }
      }
      return w;
    }
    r.seek(body + size + (size & 1));
  }
  throw FormatError("WAV has no data chunk");
}

void WriteWav(const std::filesystem::path& path, const Waveform& w, WavFormat format) {
  const auto bytes = EncodeWav(w, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Waveform ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return DecodeWav(bytes);
}

}  // namespace hushwave
