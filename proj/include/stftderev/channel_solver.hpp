// stftderev/channel_solver.hpp
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

#ifndef STFTDEREV_CHANNEL_SOLVER_HPP_
#define STFTDEREV_CHANNEL_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "stftderev/filter_bank.hpp"
#include "stftderev/stft.hpp"
#include "stftderev/types.hpp"

namespace stftderev {

/// Dimensions of the per-bin least-squares system built from a channel of
/// M taps under a given STFT grid and filter support [-A, B].
///
/// Spectrograms are materialized over frames [l_min, l_max]. The stacked
/// system iterates, for each probe shift lambda, over frames
/// [l_min, stack_l_max[lambda]]; rows beyond the channel's support are
/// identically zero on both sides and do not change the solution, but they
/// make the total row count equal (2+A+B+Q)R + M - 1 for every
/// configuration.
struct LsProblem {
  long l_min = 0;                 // 1 - Q - A
  long l_max = 0;                 // 1 + B + floor((M + R - 3) / R)
  std::vector<long> stack_l_max;  // per shift: 2 + B + floor((M + l - 1) / R)
  std::size_t rows = 0;           // stacked rows per bin
  std::size_t cols = 0;           // A + B + 1 unknowns
  std::size_t channel_len = 0;    // M
};

LsProblem make_ls_problem(const StftConfig& config, int future, int past,
                          std::size_t channel_len);

/// The R shifted-probe spectrograms of one channel, plus the channel length
/// that fixes the least-squares frame spans.
struct ChannelStftSet {
  std::vector<Spectrogram> shifts;  // element lambda, lambda in [0, R-1]
  std::size_t channel_len = 0;      // M
  double direct_amplitude = 0.0;    // h[n_d] (targets only; 0 otherwise)
  std::size_t direct_index = 0;     // n_d
};

/// Element lambda is the STFT of h[n - lambda], the channel's response to
/// the probe delta[n - lambda], materialized over [l_min, l_max].
ChannelStftSet shifted_channel_stfts(const ImpulseResponse& h,
                                     const StftConfig& config, int future,
                                     int past);

/// Element lambda is the STFT of h[n_d] delta[n - n_d - lambda]: the
/// direct path alone, amplitude and delay preserved, reflections removed.
ChannelStftSet target_stfts(const ImpulseResponse& h, const StftConfig& config,
                            int future, int past);

/// Per-bin complex least squares for the coefficients minimizing
/// sum_{lambda,l} |sum_r G_k[r] H^(lambda)[l-r,k] - Ht^(lambda)[l,k]|^2.
/// Bins above QR/2 are filled by conjugate symmetry. Rank-deficient bins
/// get the minimum-norm solution; all-zero bins get zero coefficients and
/// are listed in the bank's zeroed_bins diagnostics.
FilterBank solve_filter_bank(const ChannelStftSet& channel,
                             const ChannelStftSet& target, int future,
                             int past);

/// Convenience: probe, target, and solve in one call.
FilterBank solve_bank_for_channel(const ImpulseResponse& h,
                                  const StftConfig& config, int future,
                                  int past);

struct EffectiveChannel {
  /// synthesize(apply_filter_bank(channel[lambda], bank)), time-shifted left
  /// by lambda so all responses align at n = 0 (origin records the shift).
  std::vector<ImpulseResponse> per_shift;
  /// Inverse STFT of (1/R) sum_lambda H_hat^(lambda)[l,k] e^{+j 2 pi k lambda / QR}.
  ImpulseResponse average;
};

EffectiveChannel effective_channel(const ChannelStftSet& channel,
                                   const FilterBank& bank);

struct ErrorBoundReport {
  double stft_error_power = 0.0;  // P_f, (1/QR) sum |H_e|^2 over k, lambda, l
  double time_error_power = 0.0;  // sum over shifts and samples of h_e^2
  bool bound_satisfied = false;   // time <= stft within 1e-9 relative
  double slack = 0.0;             // stft_error_power - time_error_power
};

/// Evaluates both sides of the STFT-domain upper bound on the time-domain
/// residual reverberation for a given bank.
ErrorBoundReport check_error_bound(const ChannelStftSet& channel,
                                   const ChannelStftSet& target,
                                   const FilterBank& bank);

}  // namespace stftderev

#endif  // STFTDEREV_CHANNEL_SOLVER_HPP_
