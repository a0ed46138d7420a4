// stftderev/metrics.hpp
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

#ifndef STFTDEREV_METRICS_HPP_
#define STFTDEREV_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "stftderev/stft.hpp"
#include "stftderev/types.hpp"

namespace stftderev {

/// Ratios above this are reported as the cap with `capped` set; keeps file
/// output finite.
inline constexpr double kDbCap = 100.0;

struct DrrParams {
  int sidelobes = 8;        // eta, sinc sidelobes each side of the direct path
  double sigma_step = 0.01; // grid step for the fractional offset in [-1, 1]
};

struct DrrResult {
  double db = 0.0;     // +inf when capped
  bool capped = false; // reflection energy numerically zero for some shift
};

/// Direct-path energy: max over sigma in [-1, 1] of
/// sum_{n=-eta}^{eta} (sinc(pi(n+sigma)) h[n + n_d])^2, with sinc(0) = 1.
/// Taps outside the response read as zero.
double direct_path_energy(const ImpulseResponse& h, const DrrParams& params = {});

/// DRR = (10/R) sum_lambda log10(E_d(lambda) / (sum_n h_lambda^2[n] - E_d)).
/// Pass one response per shift; a single response stands for a
/// time-invariant channel.
DrrResult drr(const std::vector<ImpulseResponse>& per_shift,
              const DrrParams& params = {});
DrrResult drr(const ImpulseResponse& h, const DrrParams& params = {});

struct MetricReport {
  double drr_db = 0.0;  // filled by the harness where relevant
  double srr_db = 0.0;  // mean of per_frame_srr over counted frames
  std::vector<double> per_frame_srr;
  std::size_t frames_counted = 0;
  bool capped = false;  // some frame hit the +100 dB cap (zero error)
};

/// Segmental SRR: per frame of hop R and length QR,
/// 10 log10(sum s_d^2 / sum (s_d - s_hat)^2); silent frames (zero direct
/// energy) are excluded from the average. Signals are compared over the
/// longer length, the shorter reading as zero.
MetricReport srr_seg(const Signal& direct, const Signal& enhanced,
                     const StftConfig& config);

}  // namespace stftderev

#endif  // STFTDEREV_METRICS_HPP_
