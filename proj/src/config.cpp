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

#include "tcrystal/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <fmt/format.h>

#include "tcrystal/pauli.hpp"

namespace tcrystal {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, std::string_view expected) {
  throw std::invalid_argument(fmt::format("config key '{}': cannot read '{}' as {}", key, value, expected));
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "a number");
  return out;
}

template <typename Int>
Int to_integer(const std::string& key, const std::string& v) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "an integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, "a boolean");
}

ModelId to_model(const std::string& key, const std::string& v) {
  for (auto m : {ModelId::GhzProjector, ModelId::XyString, ModelId::Hj, ModelId::Ising, ModelId::DtcEffective}) {
    if (v == to_string(m)) return m;
  }
  bad_value(key, v, "one of ghz-proj|xy-string|hj|ising|dtc-eff");
}

Ensemble to_ensemble(const std::string& key, const std::string& v) {
  for (auto e : {Ensemble::Pure, Ensemble::Mixed, Ensemble::Thermal}) {
    if (v == to_string(e)) return e;
  }
  bad_value(key, v, "one of pure|mixed|thermal");
}

InitialState to_state(const std::string& key, const std::string& v) {
  for (auto s : {InitialState::AllUp, InitialState::GhzPlus, InitialState::GhzMinus}) {
    if (v == to_string(s)) return s;
  }
  bad_value(key, v, "one of all-up|ghz+|ghz-");
}

void require_known(const std::string& key) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
    throw std::invalid_argument(fmt::format("unknown config key '{}'", key));
  }
}

}  // namespace

std::string_view to_string(ModelId m) {
  switch (m) {
    case ModelId::GhzProjector: return "ghz-proj";
    case ModelId::XyString: return "xy-string";
    case ModelId::Hj: return "hj";
    case ModelId::Ising: return "ising";
    case ModelId::DtcEffective: return "dtc-eff";
  }
  return "?";
}

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Pure: return "pure";
    case Ensemble::Mixed: return "mixed";
    case Ensemble::Thermal: return "thermal";
  }
  return "?";
}

std::string_view to_string(InitialState s) {
  switch (s) {
    case InitialState::AllUp: return "all-up";
    case InitialState::GhzPlus: return "ghz+";
    case InitialState::GhzMinus: return "ghz-";
  }
  return "?";
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model", "n", "j", "beta", "phi", "t0", "dt", "count", "ensemble",
      "out", "seed", "samples", "steps", "state", "degeneracy_tol", "weight_tol", "compare",
  };
  return keys;
}

RawConfig parse_config_text(std::string_view text) {
  RawConfig raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(fmt::format("config line {}: expected key=value, got '{}'", line_no, t));
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    require_known(key);
    raw[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return raw;
}

ParsedConfig parse_config(const RawConfig& file, const RawConfig& flags) {
  ParsedConfig parsed;
  for (const auto& [k, v] : file) require_known(k), parsed.resolved[k] = v;
  for (const auto& [k, v] : flags) {
    require_known(k);
    if (auto it = file.find(k); it != file.end() && it->second != v) {
      parsed.overrides.push_back({k, it->second, v});
    }
    parsed.resolved[k] = v;
  }

  RunConfig& c = parsed.config;
  for (const auto& [k, v] : parsed.resolved) {
    if (k == "model") c.model = to_model(k, v);
    else if (k == "n") c.n = to_integer<int>(k, v);
    else if (k == "j") c.j = to_double(k, v);
    else if (k == "beta") c.beta = to_double(k, v);
    else if (k == "phi") c.phi = v == "auto" ? std::nullopt : std::optional<double>(to_double(k, v));
    else if (k == "t0") c.grid.t0 = to_double(k, v);
    else if (k == "dt") c.grid.dt = to_double(k, v);
    else if (k == "count") c.grid.count = to_integer<std::size_t>(k, v);
    else if (k == "ensemble") c.ensemble = to_ensemble(k, v);
    else if (k == "out") c.out = v;
    else if (k == "seed") c.seed = to_integer<std::uint64_t>(k, v);
    else if (k == "samples") c.samples = to_integer<int>(k, v);
    else if (k == "steps") c.steps = to_integer<int>(k, v);
    else if (k == "state") c.state = to_state(k, v);
    else if (k == "degeneracy_tol") c.degeneracy_tol = to_double(k, v);
    else if (k == "weight_tol") c.weight_tol = to_double(k, v);
    else if (k == "compare") c.compare = to_bool(k, v);
  }

  if (c.n > kMaxQubits) {
    throw CapacityError(fmt::format("config key 'n': {} exceeds the dense limit of {} qubits (2^n x 2^n matrices)",
                                    c.n, kMaxQubits));
  }
  if (c.n < 1) throw std::invalid_argument(fmt::format("config key 'n': must be >= 1, got {}", c.n));
  if (!(c.grid.dt > 0.0)) throw std::invalid_argument("config key 'dt': must be > 0");
  if (c.grid.count < 2) throw std::invalid_argument("config key 'count': must be >= 2");
  if (!(c.beta >= 0.0)) throw std::invalid_argument("config key 'beta': must be >= 0");
  if (c.samples < 0) throw std::invalid_argument("config key 'samples': must be >= 0");
  if (c.steps < 1) throw std::invalid_argument("config key 'steps': must be >= 1");
  return parsed;
}

}  // namespace tcrystal
