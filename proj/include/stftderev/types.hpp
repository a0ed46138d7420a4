// stftderev/types.hpp
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

#ifndef STFTDEREV_TYPES_HPP_
#define STFTDEREV_TYPES_HPP_

#include <cstddef>
#include <vector>

namespace stftderev {

/// A real-valued, time-domain sample sequence starting at sample index 0.
struct Signal {
  std::vector<double> samples;
  double sample_rate = 16000.0;
};

/// A real-valued sequence whose first sample sits at time index `start`.
/// Overlap-add outputs and effective channel responses can begin at
/// negative sample indices, which Signal cannot represent.
struct TimeSeries {
  std::vector<double> samples;
  long start = 0;
};

/// Finite channel impulse response h[0..M-1].
///
/// `direct_index` is the tap index of the direct path (n_d). `origin` is
/// the time index of taps[0]; it is 0 for measured or generated channels
/// and may be negative for effective (filtered) responses.
struct ImpulseResponse {
  std::vector<double> taps;
  double sample_rate = 16000.0;
  std::size_t direct_index = 0;
  long origin = 0;
};

/// Builds an ImpulseResponse with direct_index set to the maximum-magnitude
/// tap. Throws std::invalid_argument on empty or non-finite taps.
ImpulseResponse make_impulse_response(std::vector<double> taps,
                                      double sample_rate);

/// Index of the maximum-magnitude element (first one on ties).
std::size_t peak_index(const std::vector<double>& taps);

/// Sum of squared samples.
double energy(const std::vector<double>& x);

/// Throws std::invalid_argument if any value is NaN or infinite.
void check_finite(const std::vector<double>& x, const char* what);

/// Full linear convolution, length a.size() + b.size() - 1.
std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b);

}  // namespace stftderev

#endif  // STFTDEREV_TYPES_HPP_
