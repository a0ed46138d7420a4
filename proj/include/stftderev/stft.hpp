// stftderev/stft.hpp
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

#ifndef STFTDEREV_STFT_HPP_
#define STFTDEREV_STFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stftderev/types.hpp"

namespace stftderev {

class FilterBank;

enum class WindowKind {
  kSqrtHann,           // periodic square-root Hann, scaled for reconstruction
  kRectangularScaled,  // constant 1/sqrt(Q)
};

WindowKind parse_window_kind(std::string_view name);
const char* window_kind_name(WindowKind kind);

/// Analysis/synthesis grid: overlap factor Q, hop R, window of length QR.
/// Construction validates the reconstruction condition
/// sum_q w^2[qR+n] = 1 for all n in [0, R-1], to within 1e-12.
class StftConfig {
 public:
  StftConfig(int overlap, int hop, std::vector<double> window);

  int overlap() const { return overlap_; }          // Q
  int hop() const { return hop_; }                  // R
  int frame_len() const { return overlap_ * hop_; } // QR
  int n_bins() const { return frame_len(); }
  const std::vector<double>& window() const { return window_; }

 private:
  int overlap_;
  int hop_;
  std::vector<double> window_;
};

/// Builds a reconstruction-compliant window of the given family.
/// For overlap == 1 both families degenerate to the all-ones window,
/// the only window satisfying the condition without overlap.
StftConfig make_window(WindowKind kind, int overlap, int hop);
StftConfig make_window(std::string_view kind, int overlap, int hop);

/// Complex frames x bins array. Frame index l maps to row l - first_frame();
/// negative l (left zero-padding frames) are materialized like any other.
class Spectrogram {
 public:
  Spectrogram(StftConfig config, long first_frame, std::size_t n_frames,
              double sample_rate);

  const StftConfig& config() const { return config_; }
  long first_frame() const { return first_frame_; }
  long last_frame() const { return first_frame_ + long(n_frames_) - 1; }
  /// Row index of the frame labeled l = 0.
  long frame_offset() const { return -first_frame_; }
  std::size_t n_frames() const { return n_frames_; }
  int n_bins() const { return config_.n_bins(); }
  double sample_rate() const { return sample_rate_; }

  std::complex<double>& at(long frame, int bin);
  std::complex<double> at(long frame, int bin) const;
  /// Reads frame `l`, bin `k`; frames outside the materialized range are 0.
  std::complex<double> frame_bin(long frame, int bin) const;

  std::span<const std::complex<double>> row(long frame) const;
  std::span<std::complex<double>> row(long frame);

  /// Largest |X[l,k] - conj(X[l, QR-k])| over all frames and bins.
  double conjugate_asymmetry() const;
  double max_abs() const;

 private:
  StftConfig config_;
  long first_frame_;
  std::size_t n_frames_;
  double sample_rate_;
  std::vector<std::complex<double>> data_;
};

/// Windowed STFT per X[l,k] = sum_n y[n+lR] w[n] e^{-j 2 pi k n / QR}.
/// Frames run from -(Q-1) to floor((N-1)/R) so every sample is covered by
/// exactly Q frames; out-of-range samples read as zero.
Spectrogram analyze(const Signal& signal, const StftConfig& config);

/// STFT over an explicit frame range of a source placed at time `start`.
Spectrogram analyze_frames(std::span<const double> samples, long start,
                           const StftConfig& config, long first_frame,
                           long last_frame, double sample_rate);

/// Inverse DFT per frame, windowed again, overlap-added. The result covers
/// the full synthesis support, which starts at first_frame * R (possibly
/// negative). Throws if the spectrogram is conjugate-asymmetric beyond
/// 1e-6 relative (it would synthesize a complex signal).
TimeSeries synthesize_span(const Spectrogram& spec);

/// Same as synthesize_span, trimmed to time indices n >= 0.
Signal synthesize(const Spectrogram& spec);

/// Trimmed (or zero-padded) to exactly `ref_len` samples from n = 0.
Signal synthesize(const Spectrogram& spec, std::size_t ref_len);

/// S_hat_k[l] = sum_{r=-A}^{B} G_k[r] Y_k[l-r]. The output frame range
/// expands by A frames before and B after; out-of-range input frames read
/// as zero.
Spectrogram apply_filter_bank(const Spectrogram& spec, const FilterBank& bank);

}  // namespace stftderev

#endif  // STFTDEREV_STFT_HPP_
