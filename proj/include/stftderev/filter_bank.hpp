// stftderev/filter_bank.hpp
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

#ifndef STFTDEREV_FILTER_BANK_HPP_
#define STFTDEREV_FILTER_BANK_HPP_

#include <complex>
#include <string>
#include <vector>

#include "stftderev/stft.hpp"

namespace stftderev {

/// Per-bin frame-combination coefficients G_k[r], r in [-A, B], where A
/// counts future frames and B past frames. Rows are bins (QR of them).
/// Banks built by the solver satisfy G_k[r] = conj(G_{QR-k}[r]) so that
/// filtered spectrograms of real signals stay conjugate symmetric.
class FilterBank {
 public:
  FilterBank(StftConfig config, int future, int past);

  /// Identity coefficients G_k[r] = delta[r].
  static FilterBank delta(StftConfig config, int future, int past);

  const StftConfig& config() const { return config_; }
  int future() const { return future_; }  // A
  int past() const { return past_; }      // B
  int n_taps() const { return future_ + past_ + 1; }
  int n_bins() const { return config_.n_bins(); }

  std::complex<double> coeff(int bin, int r) const;
  void set_coeff(int bin, int r, std::complex<double> value);

  /// Bins whose least-squares design matrix was all zero (unexcitable);
  /// their coefficients are zero. Filled by solve_filter_bank.
  const std::vector<int>& zeroed_bins() const { return zeroed_bins_; }
  void set_zeroed_bins(std::vector<int> bins) { zeroed_bins_ = std::move(bins); }

  /// Largest |G_k[r] - conj(G_{QR-k}[r])| over bins and taps.
  double conjugate_asymmetry() const;

 private:
  StftConfig config_;
  int future_;
  int past_;
  std::vector<std::complex<double>> coeffs_;  // n_bins x n_taps, row-major
  std::vector<int> zeroed_bins_;
};

/// JSON serialization. The file stores format_version, the STFT grid
/// (overlap, hop, window kind), A, B, and per-bin [re, im, re, im, ...]
/// rows. Numbers round-trip bit-exactly.
void save_filter_bank(const FilterBank& bank, const std::string& path);
FilterBank load_filter_bank(const std::string& path);

std::string filter_bank_to_json(const FilterBank& bank);
FilterBank filter_bank_from_json(const std::string& text);

}  // namespace stftderev

#endif  // STFTDEREV_FILTER_BANK_HPP_
