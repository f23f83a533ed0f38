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

#include <filesystem>
#include <string>
#include <string_view>

#include "tcrystal/correlation.hpp"
#include "tcrystal/fourier.hpp"

namespace tcrystal {

/// `t,re,im,abs` with a header line; 17 significant digits.
std::string series_csv(const TimeSeries& ts);
/// `omega,power` with a header line.
std::string spectrum_csv(const SpectrumData& s);
/// `index,energy` with a header line.
std::string eigenvalues_csv(const Eigen::VectorXd& e);

/// Writes `content` to `path`, throwing std::runtime_error on failure.
void write_text(const std::filesystem::path& path, std::string_view content);

}  // namespace tcrystal
