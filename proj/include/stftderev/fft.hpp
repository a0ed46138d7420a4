// stftderev/fft.hpp
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

#ifndef STFTDEREV_FFT_HPP_
#define STFTDEREV_FFT_HPP_

#include <complex>
#include <vector>

namespace stftderev::detail {

/// In-place DFT of any length. Forward is unnormalized,
/// X[k] = sum_n x[n] e^{-j 2 pi k n / N}; inverse includes the 1/N factor.
/// Radix-2 for power-of-two sizes, Bluestein otherwise.
void fft(std::vector<std::complex<double>>& x, bool inverse);

}  // namespace stftderev::detail

#endif  // STFTDEREV_FFT_HPP_
