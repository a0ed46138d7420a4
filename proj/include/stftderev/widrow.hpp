// stftderev/widrow.hpp
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

#ifndef STFTDEREV_WIDROW_HPP_
#define STFTDEREV_WIDROW_HPP_

#include <cstddef>

#include "stftderev/types.hpp"

namespace stftderev {

/// Time-domain least-squares inverse filter design.
struct InverseFilterSpec {
  std::size_t filter_len = 1024;   // taps of g
  std::size_t channel_len = 1024;  // N_h; h is truncated or padded to this
  /// Sample index of the 1 in the target vector; negative means the default
  /// n_d + filter_len/2 (modeling delay).
  long target_delay = -1;
  /// Above this many convolution-matrix entries the solve goes matrix-free
  /// (conjugate gradient on the normal equations) instead of dense QR.
  std::size_t dense_limit = 64u * 1024u * 1024u;
};

/// Solves min_g || T(h) g - e_d ||^2 where T(h) is the
/// (N_h + filter_len - 1) x filter_len convolution matrix of h and e_d is
/// the unit vector at the target delay. Throws on an all-zero channel.
ImpulseResponse widrow_inverse(const ImpulseResponse& h,
                               const InverseFilterSpec& spec);

/// Full convolution y * g.
Signal equalize(const Signal& y, const ImpulseResponse& g);

}  // namespace stftderev

#endif  // STFTDEREV_WIDROW_HPP_
