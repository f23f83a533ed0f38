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

#include "tcrystal/fourier.hpp"

#include <algorithm>
#include <mutex>
#include <numbers>

#include <fftw3.h>
#include <fmt/format.h>

namespace tcrystal {
namespace {

// FFTW planning touches global state.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<complex> transform(const std::vector<complex>& in, int sign) {
  const int count = static_cast<int>(in.size());
  std::vector<complex> out(in.size());
  std::vector<complex> work(in);
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(count, reinterpret_cast<fftw_complex*>(work.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
  return out;
}

}  // namespace

std::vector<complex> dft(const std::vector<complex>& samples) {
  if (samples.size() < 2) throw std::invalid_argument("DFT needs at least 2 samples");
  return transform(samples, FFTW_FORWARD);
}

std::vector<complex> inverse_dft(const std::vector<complex>& spectrum) {
  if (spectrum.size() < 2) throw std::invalid_argument("DFT needs at least 2 samples");
  auto out = transform(spectrum, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(spectrum.size());
  for (auto& v : out) v *= scale;
  return out;
}

double bin_frequency(std::size_t k, std::size_t count, double dt) {
  const auto signed_k = k > count / 2 ? static_cast<double>(k) - static_cast<double>(count) : static_cast<double>(k);
  return 2.0 * std::numbers::pi * signed_k / (static_cast<double>(count) * dt);
}

SpectrumData power_spectrum(const TimeSeries& ts) {
  ts.grid.validate();
  if (ts.values.size() != ts.grid.count) {
    throw std::invalid_argument(fmt::format("series has {} samples, grid says {}", ts.values.size(), ts.grid.count));
  }
  const auto x = dft(ts.values);
  const std::size_t count = x.size();
  // Ascending frequency: negative bins first.
  const std::size_t first_negative = count / 2 + 1;
  SpectrumData s;
  s.omega.reserve(count);
  s.power.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = (first_negative + i) % count;
    s.omega.push_back(bin_frequency(k, count, ts.grid.dt));
    s.power.push_back(std::norm(x[k]));
  }
  return s;
}

std::vector<std::size_t> find_peaks(const SpectrumData& s, double rel_threshold) {
  const std::size_t count = s.power.size();
  std::vector<std::size_t> peaks;
  if (count == 0) return peaks;
  const double cut = rel_threshold * *std::max_element(s.power.begin(), s.power.end());
  for (std::size_t k = 0; k < count; ++k) {
    const double p = s.power[k];
    const double left = s.power[(k + count - 1) % count];
    const double right = s.power[(k + 1) % count];
    // Ties resolve to the leftmost bin of a plateau.
    if (p >= cut && p > left && p >= right) peaks.push_back(k);
  }
  return peaks;
}

double dominant_frequency(const SpectrumData& s) {
  if (s.power.empty()) throw std::invalid_argument("empty spectrum");
  const auto it = std::max_element(s.power.begin(), s.power.end());
  return s.omega[static_cast<std::size_t>(it - s.power.begin())];
}

}  // namespace tcrystal
