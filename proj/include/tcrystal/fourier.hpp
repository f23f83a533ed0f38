// Copyright 2026 The tcrystal Authors
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

#pragma once

#include <vector>

#include "tcrystal/correlation.hpp"

namespace tcrystal {

/// Power per DFT bin, ordered by ascending angular frequency.
struct SpectrumData {
  std::vector<double> omega;
  std::vector<double> power;
};

/// Unnormalized forward DFT with the e^{-i omega t} kernel, natural bin order.
std::vector<complex> dft(const std::vector<complex>& samples);
/// Inverse of dft (carries the 1/count factor).
std::vector<complex> inverse_dft(const std::vector<complex>& spectrum);

/// Angular frequency of DFT bin k: 2 pi k' / (count dt), with k' = k - count
/// for k > count/2.
double bin_frequency(std::size_t k, std::size_t count, double dt);

/// |DFT|^2 of the samples with a signed angular-frequency axis. Sum of power
/// equals count * sum |f|^2.
SpectrumData power_spectrum(const TimeSeries& ts);

/// Local maxima (neighbours compared cyclically) with power at least
/// rel_threshold times the global maximum. Returns indices into `s`.
std::vector<std::size_t> find_peaks(const SpectrumData& s, double rel_threshold);

/// Frequency of the bin with the largest power.
double dominant_frequency(const SpectrumData& s);

}  // namespace tcrystal
