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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcrystal/correlation.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {

enum class ModelId { GhzProjector, XyString, Hj, Ising, DtcEffective };
enum class Ensemble { Pure, Mixed, Thermal };
enum class InitialState { AllUp, GhzPlus, GhzMinus };

std::string_view to_string(ModelId m);
std::string_view to_string(Ensemble e);
std::string_view to_string(InitialState s);

/// Everything one CLI invocation needs. Defaults are the documented ones.
struct RunConfig {
  ModelId model = ModelId::XyString;
  int n = 6;
  double j = 1.0;
  double beta = 1.0;
  std::optional<double> phi;  ///< empty means -1/n
  TimeGrid grid{0.0, 0.1, 2048};
  Ensemble ensemble = Ensemble::Pure;
  std::string out = "out";
  std::uint64_t seed = 1;
  int samples = 100;
  int steps = 20;
  InitialState state = InitialState::AllUp;
  double degeneracy_tol = kDefaultDegeneracyTol;
  double weight_tol = kDefaultWeightTol;
  bool compare = true;

  double resolved_phi() const { return phi ? *phi : -1.0 / n; }
};

/// Flat key -> raw value map, as read from a file or from flags.
using RawConfig = std::map<std::string, std::string>;

/// A key given both in the file and as a flag; the flag wins.
struct ConfigOverride {
  std::string key;
  std::string file_value;
  std::string flag_value;
};

struct ParsedConfig {
  RunConfig config;
  RawConfig resolved;  ///< merged raw values that were set explicitly
  std::vector<ConfigOverride> overrides;
};

/// Every accepted key, in documentation order.
const std::vector<std::string>& config_keys();

/// `key = value` lines; blank lines and `#` comments are skipped.
/// Throws std::invalid_argument naming the line or unknown key.
RawConfig parse_config_text(std::string_view text);

/// Merges file values with flag values (flags win), converts types and
/// validates. Errors name the offending key.
ParsedConfig parse_config(const RawConfig& file, const RawConfig& flags);

}  // namespace tcrystal
