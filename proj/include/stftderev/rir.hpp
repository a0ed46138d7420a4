// stftderev/rir.hpp
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

#ifndef STFTDEREV_RIR_HPP_
#define STFTDEREV_RIR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stftderev/types.hpp"

namespace stftderev {

/// Shoebox room for the image method. One reflection coefficient is shared
/// by all six walls.
struct RoomSpec {
  std::array<double, 3> dimensions{5.0, 4.0, 3.0};  // meters
  std::array<double, 3> source{1.0, 1.0, 1.5};
  std::array<double, 3> mic{3.5, 2.5, 1.5};
  double reflection_coeff = 0.85;  // beta in [0, 1)
  double sample_rate = 16000.0;
  std::size_t rir_len = 4096;  // M, taps
  int max_order = -1;          // image reflection order; negative = unlimited
  double speed_of_sound = 343.0;
};

/// Image-method RIR: each image contributes
/// beta^(reflection count) / (4 pi distance) at the fractional delay
/// distance/c, deposited with a Hann-tapered sinc kernel of +-8 sidelobes.
/// Deterministic; the seed parameter is reserved and currently unused.
ImpulseResponse generate_rir(const RoomSpec& spec, std::uint64_t seed = 0);

/// Sampling ranges for batch_rooms.
struct RoomRanges {
  std::array<double, 2> room_x{3.0, 8.0};
  std::array<double, 2> room_y{3.0, 7.0};
  std::array<double, 2> room_z{2.5, 4.0};
  std::array<double, 2> beta{0.7, 0.92};
  double min_distance = 2.0;  // source-mic, meters (>= 0.5 enforced)
  double wall_margin = 0.6;   // positions stay this far from every wall
  double sample_rate = 16000.0;
  std::size_t rir_len = 4096;
  int max_order = -1;
};

/// Deterministic pseudo-random corpus: n_rooms rooms, n_positions
/// source/mic placements per room, reproducible bit-for-bit from the seed.
/// Throws std::invalid_argument when the ranges cannot satisfy the margin
/// and distance constraints.
std::vector<RoomSpec> batch_rooms(int n_rooms, int n_positions,
                                  const RoomRanges& ranges,
                                  std::uint64_t seed);

}  // namespace stftderev

#endif  // STFTDEREV_RIR_HPP_
