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

#include "tcrystal/csv.hpp"

#include <fstream>

#include <fmt/format.h>

namespace tcrystal {

std::string series_csv(const TimeSeries& ts) {
  std::string out = "t,re,im,abs\n";
  for (std::size_t k = 0; k < ts.values.size(); ++k) {
    const complex f = ts.values[k];
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", ts.grid.at(k), f.real(), f.imag(), std::abs(f));
  }
  return out;
}

std::string spectrum_csv(const SpectrumData& s) {
  std::string out = "omega,power\n";
  for (std::size_t k = 0; k < s.omega.size(); ++k) out += fmt::format("{:.17g},{:.17g}\n", s.omega[k], s.power[k]);
  return out;
}

std::string eigenvalues_csv(const Eigen::VectorXd& e) {
  std::string out = "index,energy\n";
  for (Eigen::Index k = 0; k < e.size(); ++k) out += fmt::format("{},{:.17g}\n", k, e[k]);
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace tcrystal
