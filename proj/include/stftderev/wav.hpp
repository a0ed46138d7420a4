// stftderev/wav.hpp
//
// Copyright 2026  The stftderev authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STFTDEREV_WAV_HPP_
#define STFTDEREV_WAV_HPP_

#include <stdexcept>
#include <string>

#include "stftderev/types.hpp"

namespace stftderev {

class WavError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WavFormat {
  kPcm16,
  kFloat32,
};

/// Reads a mono PCM-16 or IEEE-float-32 WAV file. PCM samples map to
/// [-1, 1) as s / 32768. Stereo or other codecs raise WavError; malformed
/// or truncated files raise WavError naming the byte offset.
Signal wav_read(const std::string& path);

/// Writes a mono WAV file. Float-32 is lossless for double inputs within
/// float precision; PCM-16 rounds to s = round(x * 32768), clamped.
/// The file is written to a temporary name and renamed into place.
void wav_write(const std::string& path, const Signal& signal,
               WavFormat format = WavFormat::kFloat32);

}  // namespace stftderev

#endif  // STFTDEREV_WAV_HPP_
