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

#include "tcrystal/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tcrystal/correlation.hpp"
#include "tcrystal/csv.hpp"
#include "tcrystal/floquet.hpp"
#include "tcrystal/fourier.hpp"
#include "tcrystal/hilbert.hpp"
#include "tcrystal/models.hpp"

namespace tcrystal {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

json config_json(const RunConfig& c) {
  json j;
  j["model"] = to_string(c.model);
  j["n"] = c.n;
  j["j"] = c.j;
  j["beta"] = c.beta;
  j["phi"] = c.phi ? json(*c.phi) : json("auto");
  j["t0"] = c.grid.t0;
  j["dt"] = c.grid.dt;
  j["count"] = c.grid.count;
  j["ensemble"] = to_string(c.ensemble);
  j["out"] = c.out;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["steps"] = c.steps;
  j["state"] = to_string(c.state);
  j["degeneracy_tol"] = c.degeneracy_tol;
  j["weight_tol"] = c.weight_tol;
  j["compare"] = c.compare;
  return j;
}

// Collects outputs for one command and writes the manifest last.
class Run {
 public:
  Run(std::string command, const ParsedConfig& cfg)
      : start_(std::chrono::steady_clock::now()), dir_(cfg.config.out) {
    manifest_.command = std::move(command);
    manifest_.config = config_json(cfg.config);
    manifest_.overrides = cfg.overrides;
  }

  void write(const std::string& name, std::string_view content) {
    fs::create_directories(dir_);
    write_text(dir_ / name, content);
    manifest_.files.push_back(name);
  }

  json& scalars() { return manifest_.scalars; }

  RunManifest finish() {
    fs::create_directories(dir_);
    manifest_.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    write_text(dir_ / "manifest.json", manifest_.to_json().dump(2) + "\n");
    return manifest_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  fs::path dir_;
  RunManifest manifest_;
};

StateVector initial_state(const RunConfig& c) {
  switch (c.state) {
    case InitialState::GhzPlus: return make_ghz(GhzSign::Plus, c.n);
    case InitialState::GhzMinus: return make_ghz(GhzSign::Minus, c.n);
    case InitialState::AllUp: break;
  }
  return StateVector::all_up(c.n);
}

}  // namespace

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["config"] = config;
  json ov = json::array();
  for (const auto& o : overrides) ov.push_back({{"key", o.key}, {"file", o.file_value}, {"flag", o.flag_value}});
  j["overrides"] = ov;
  j["seed"] = config.contains("seed") ? config["seed"] : json(nullptr);
  j["wall_time_s"] = wall_time_s;
  j["files"] = files;
  j["scalars"] = scalars;
  return j;
}

OperatorSum model_operator(const RunConfig& c) {
  switch (c.model) {
    case ModelId::XyString: return build_xy_string(c.n, c.j);
    case ModelId::Hj: return build_hj(c.n, c.j);
    case ModelId::Ising: return build_ising_ring(c.n);
    case ModelId::DtcEffective: return build_dtc_effective(c.n);
    case ModelId::GhzProjector: return pauli_decompose(model_dense(c), c.n);
  }
  throw std::logic_error("unhandled model");
}

Eigen::MatrixXcd model_dense(const RunConfig& c) {
  if (c.model == ModelId::GhzProjector) {
    return build_projector_hamiltonian({c.n, {make_ghz(GhzSign::Plus, c.n)}, {-1.0}});
  }
  return to_dense(model_operator(c));
}

SpectralDecomposition diagonalize_model(const RunConfig& c) {
  if (c.model == ModelId::GhzProjector) return diagonalize(model_dense(c));
  return diagonalize(model_operator(c));
}

RunManifest cmd_spectrum(const ParsedConfig& pc) {
  const RunConfig& c = pc.config;
  Run run("spectrum", pc);
  const auto sd = diagonalize_model(c);
  run.write("eigenvalues.csv", eigenvalues_csv(sd.eigenvalues()));

  const int m = gs_degeneracy(sd, c.degeneracy_tol);
  auto& s = run.scalars();
  s["gs_energy"] = sd.ground_energy();
  s["gap"] = spectral_gap(sd, c.degeneracy_tol);
  s["gs_degeneracy"] = m;
  s["nondegenerate"] = m == 1;
  if (m == 1) s["order_parameter"] = order_parameter(ground_state(sd, c.degeneracy_tol));
  const Eigen::MatrixXcd h = model_dense(c);
  const auto gp = make_ghz(GhzSign::Plus, c.n).amplitudes();
  const auto gm = make_ghz(GhzSign::Minus, c.n).amplitudes();
  const double ep = gp.dot(h * gp).real();
  const double em = gm.dot(h * gm).real();
  s["e_ghz_plus"] = ep;
  s["e_ghz_minus"] = em;
  s["ghz_splitting"] = std::abs(ep - em);
  const double beta = c.ensemble == Ensemble::Thermal ? c.beta : kInfiniteBeta;
  s["harmonic_count"] = count_bohr_harmonics(sd, beta, c.weight_tol);
  return run.finish();
}

RunManifest cmd_corr(const ParsedConfig& pc) {
  const RunConfig& c = pc.config;
  c.grid.validate();
  Run run("corr", pc);
  const auto sd = diagonalize_model(c);
  const auto mz = mz_operator(c.n);

  Harmonics harmonics;
  switch (c.ensemble) {
    case Ensemble::Pure:
      if (const int m = gs_degeneracy(sd, c.degeneracy_tol); m != 1) throw DegenerateGroundStateError(m);
      harmonics = ground_manifold_harmonics(sd, mz, mz, c.degeneracy_tol);
      break;
    case Ensemble::Mixed: harmonics = ground_manifold_harmonics(sd, mz, mz, c.degeneracy_tol); break;
    case Ensemble::Thermal: harmonics = thermal_harmonics(sd, c.beta, c.degeneracy_tol); break;
  }
  const TimeSeries series = evaluate(harmonics, c.grid);
  const SpectrumData spectrum = power_spectrum(series);
  run.write("series.csv", series_csv(series));
  run.write("spectrum.csv", spectrum_csv(spectrum));

  auto& s = run.scalars();
  s["gs_energy"] = sd.ground_energy();
  s["gs_degeneracy"] = gs_degeneracy(sd, c.degeneracy_tol);
  s["f0_re"] = series.values.front().real();
  s["f0_im"] = series.values.front().imag();
  const double dominant = dominant_frequency(spectrum);
  s["dominant_omega"] = dominant;
  s["oscillation_frequency"] = -dominant;
  s["bin_width"] = 2.0 * std::numbers::pi / (static_cast<double>(c.grid.count) * c.grid.dt);
  s["harmonic_count"] = count_significant_harmonics(harmonics, c.weight_tol);
  s["peak_count"] = find_peaks(spectrum, 0.01).size();
  return run.finish();
}

RunManifest cmd_stability(const ParsedConfig& pc) {
  const RunConfig& c = pc.config;
  Run run("stability", pc);
  const auto sd = diagonalize_model(c);
  const StateVector gs = ground_state(sd, c.degeneracy_tol);
  const StateVector gp = make_ghz(GhzSign::Plus, c.n);

  std::mt19937_64 rng(c.seed);
  std::string rows = "kind,index,gs_expectation,ghz_plus_expectation\n";
  double max_gs = 0.0, max_gp = 0.0;
  int tested = 0;
  auto record = [&](std::string_view kind, int index, const OperatorSum& dh) {
    const double a = std::abs(expectation(dh, gs));
    const double b = std::abs(expectation(dh, gp));
    max_gs = std::max(max_gs, a);
    max_gp = std::max(max_gp, b);
    ++tested;
    rows += fmt::format("{},{},{:.17g},{:.17g}\n", kind, index, a, b);
  };
  if (c.samples > 0) {
    for (int r = 0; r < c.samples; ++r) {
      const auto h = random_fields(c.n, rng);
      record("field", r, build_field_perturbation(c.n, h));
    }
    record("nn-x", 0, build_nn_perturbation(c.n, Axis::X));
    record("nn-y", 0, build_nn_perturbation(c.n, Axis::Y));
  }
  run.write("stability.csv", rows);

  auto& s = run.scalars();
  s["perturbations"] = tested;
  s["max_gs_expectation"] = max_gs;
  s["max_ghz_plus_expectation"] = max_gp;
  s["gs_energy"] = sd.ground_energy();
  return run.finish();
}

RunManifest cmd_dtc(const ParsedConfig& pc) {
  const RunConfig& c = pc.config;
  if (c.compare && (c.n % 2 == 0 || c.n < 3 || c.n > 11)) {
    throw std::invalid_argument(fmt::format(
        "effective-Hamiltonian comparison needs odd n in [3, 11], got {} (pass --compare false to skip)", c.n));
  }
  Run run("dtc", pc);
  const auto protocol = DtcProtocol::uniform(c.n, c.resolved_phi());
  const auto mz = stroboscopic_run(protocol, initial_state(c), c.steps);
  std::string rows = "step,mz\n";
  for (std::size_t k = 0; k < mz.size(); ++k) rows += fmt::format("{},{:.17g}\n", k + 1, mz[k]);
  run.write("magnetization.csv", rows);

  bool alternating = true;
  for (std::size_t k = 0; k + 1 < mz.size(); ++k) alternating = alternating && mz[k] * mz[k + 1] < 0.0;
  auto& s = run.scalars();
  s["phi"] = c.resolved_phi();
  s["sign_alternating"] = alternating;
  s["final_mz"] = mz.back();

  if (c.compare) {
    const auto cmp = compare_effective(c.n);
    json j;
    j["n"] = cmp.n;
    j["max_deviation"] = cmp.max_deviation;
    j["exact_within_tolerance"] = cmp.max_deviation <= kEffectiveExactnessTol;
    j["ground_state"] = cmp.ground_state;
    j["energy_ghz_plus"] = cmp.energy_ghz_plus;
    j["energy_ghz_minus"] = cmp.energy_ghz_minus;
    j["ghz_splitting"] = cmp.ghz_splitting;
    if (cmp.eigenphases_compared) j["eigenphase_deviation"] = cmp.eigenphase_deviation;
    run.write("compare.json", j.dump(2) + "\n");
    s["max_deviation"] = cmp.max_deviation;
    s["ground_state"] = cmp.ground_state;
    s["ghz_splitting"] = cmp.ghz_splitting;
  }
  return run.finish();
}

RunManifest cmd_decompose(const ParsedConfig& pc) {
  const RunConfig& c = pc.config;
  Run run("decompose", pc);
  const auto terms = pauli_decompose(model_dense(c), c.n);
  run.write("terms.txt", serialize(terms));
  run.scalars()["term_count"] = terms.size();
  return run.finish();
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact diagonalization of N-qubit Pauli-string Hamiltonians"};
  app.require_subcommand(1);
  std::string config_path;
  RawConfig flag_values;

  struct Command {
    std::string name;
    std::string help;
    RunManifest (*fn)(const ParsedConfig&);
  };
  const std::vector<Command> commands = {
      {"spectrum", "eigenvalues and spectral scalars", cmd_spectrum},
      {"corr", "M_z correlation function and its power spectrum", cmd_corr},
      {"stability", "perturbation expectation sweep", cmd_stability},
      {"dtc", "stroboscopic DTC run and effective-Hamiltonian comparison", cmd_dtc},
      {"decompose", "Pauli expansion of a model", cmd_decompose},
  };
  std::map<std::string, std::map<std::string, std::string>> bound;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--config", config_path, "key=value config file");
    for (const auto& key : config_keys()) sub->add_option("--" + key, bound[cmd.name][key]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (const auto& cmd : commands) {
      auto* sub = app.get_subcommand(cmd.name);
      if (!sub->parsed()) continue;
      for (const auto& key : config_keys()) {
        if (sub->count("--" + key) > 0) flag_values[key] = bound[cmd.name][key];
      }
      RawConfig file_values;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw std::runtime_error(fmt::format("cannot read config file '{}'", config_path));
        const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        file_values = parse_config_text(text);
      }
      const auto manifest = cmd.fn(parse_config(file_values, flag_values));
      std::cout << fmt::format("{}: wrote {} file(s) + manifest.json to {}\n", cmd.name, manifest.files.size(),
                               manifest.config["out"].get<std::string>());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace tcrystal
