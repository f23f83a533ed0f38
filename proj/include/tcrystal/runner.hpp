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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tcrystal/config.hpp"
#include "tcrystal/pauli.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {

inline constexpr std::string_view kVersion = "0.1.0";

/// Hamiltonian of the configured model. Operator-sum models keep their sum;
/// the GHZ projector is only available densely.
OperatorSum model_operator(const RunConfig& cfg);
Eigen::MatrixXcd model_dense(const RunConfig& cfg);
SpectralDecomposition diagonalize_model(const RunConfig& cfg);

/// What a command wrote and computed. `manifest.json` in the output directory
/// is the serialized form.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<ConfigOverride> overrides;
  double wall_time_s = 0.0;
  std::vector<std::string> files;  ///< names relative to the output directory
  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

/// Eigenvalues CSV plus spectral scalars.
RunManifest cmd_spectrum(const ParsedConfig& cfg);
/// Correlation series, its power spectrum and harmonic scalars.
RunManifest cmd_corr(const ParsedConfig& cfg);
/// Seeded perturbation sweep against the ground state and G+.
RunManifest cmd_stability(const ParsedConfig& cfg);
/// Stroboscopic magnetization and, for odd n, the effective-Hamiltonian check.
RunManifest cmd_dtc(const ParsedConfig& cfg);
/// Pauli expansion of the model's dense matrix.
RunManifest cmd_decompose(const ParsedConfig& cfg);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace tcrystal
