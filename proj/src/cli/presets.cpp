#include "wavepack/cli/presets.hpp"

#include <utility>

namespace wavepack::cli {

namespace {

const std::vector<std::pair<std::string, const char*>>& presets() {
  static const std::vector<std::pair<std::string, const char*>> table{
      {"free-saturation", R"json({
  "schema_version": 1,
  "name": "free-saturation",
  "description": "Free packet with p0 = 1: |A|^2 t / 2t0 saturates to exp(-p0^2 / dp0^2)",
  "system": {"kind": "free"},
  "packet": {"alpha": 1, "x0": 0, "p0": 1},
  "time": {"t_max": 10000, "unit": "t0", "n_samples": 201},
  "methods": ["analytic"],
  "checks": [{"type": "saturation", "rel_tolerance": 1e-3}]
})json"},
      {"free-mandelstam", R"json({
  "schema_version": 1,
  "name": "free-mandelstam",
  "description": "Free packet against the energy-time bound, cross-checked by split-operator propagation",
  "system": {"kind": "free"},
  "packet": {"alpha": 1, "x0": 0, "p0": 1},
  "time": {"t_max": 2, "unit": "t0", "n_samples": 401},
  "methods": ["analytic", "split_operator"],
  "grid": {"min": -64, "max": 64, "n_points": 4096},
  "propagator": {"dt": 5e-4},
  "checks": [
    {"type": "agreement", "max_abs_dA": 1e-6, "max_abs_dmod2": 1e-6},
    {"type": "mandelstam", "margin_tolerance": 1e-10, "coefficient_rel_tolerance": 1e-4}
  ]
})json"},
      {"accel-return", R"json({
  "schema_version": 1,
  "name": "accel-return",
  "description": "Packet thrown against a constant force returns at t = 2|p0|/|F| with its overlap suppressed by phase",
  "system": {"kind": "acceleration", "force": 1},
  "packet": {"alpha": 1, "x0": 0, "p0": -1},
  "time": {"t_max": 2, "n_samples": 101},
  "methods": ["analytic", "split_operator"],
  "grid": {"min": -40, "max": 40, "n_points": 4096},
  "propagator": {"dt": 1e-3},
  "checks": [
    {"type": "agreement", "max_abs_dA": 1e-6, "max_abs_dmod2": 1e-6},
    {"type": "return_suppression", "match_tolerance": 1e-6}
  ]
})json"},
      {"sho-case1", R"json({
  "schema_version": 1,
  "name": "sho-case1",
  "description": "Coherent oscillator packet: three routes agree, full revivals, never orthogonal",
  "system": {"kind": "harmonic", "omega": 1},
  "packet": {"alpha": 1, "x0": 1, "p0": 0.5},
  "time": {"t_max": 3, "unit": "T_cl", "n_samples": 241},
  "methods": ["analytic", "split_operator", "spectral"],
  "grid": {"min": -20, "max": 20, "n_points": 1024},
  "propagator": {"dt": 2.5e-4},
  "spectral": {"n_max": 60},
  "checks": [
    {"type": "agreement", "max_abs_dA": 1e-6, "max_abs_dmod2": 1e-6},
    {"type": "revival", "periods": 3, "tolerance": 1e-10},
    {"type": "case1_minimum", "tolerance": 1e-10}
  ]
})json"},
      {"sho-case2-pulsate", R"json({
  "schema_version": 1,
  "name": "sho-case2-pulsate",
  "description": "Centered squeezed packet: the width pulsates and |A| returns to 1 twice per period",
  "system": {"kind": "harmonic", "omega": 1},
  "packet": {"alpha": 2, "x0": 0, "p0": 0},
  "time": {"t_max": 2, "unit": "T_cl", "n_samples": 161},
  "methods": ["analytic", "split_operator", "spectral"],
  "grid": {"min": -20, "max": 20, "n_points": 1024},
  "propagator": {"dt": 2.5e-4},
  "spectral": {"n_max": 80},
  "checks": [
    {"type": "agreement", "max_abs_dA": 1e-6, "max_abs_dmod2": 1e-6},
    {"type": "modulus", "quantity": "A", "t": 0.5, "t_unit": "T_cl", "expected_abs": 1, "tolerance": 1e-10},
    {"type": "modulus", "quantity": "A", "t": 1, "t_unit": "T_cl", "expected_abs": 1, "tolerance": 1e-10},
    {"type": "r_inversion", "tolerance": 1e-14}
  ]
})json"},
      {"sho-anticorr", R"json({
  "schema_version": 1,
  "name": "sho-anticorr",
  "description": "Coherent packet reaches the mirror image of its start at half periods",
  "system": {"kind": "harmonic", "omega": 1},
  "packet": {"alpha": 1, "x0": 1.5, "p0": 0.5},
  "time": {"t_max": 2, "unit": "T_cl", "n_samples": 161},
  "methods": ["analytic", "split_operator", "spectral"],
  "anticorrelation": true,
  "grid": {"min": -20, "max": 20, "n_points": 1024},
  "propagator": {"dt": 2.5e-4},
  "spectral": {"n_max": 60},
  "checks": [
    {"type": "agreement", "max_abs_dA": 1e-6, "max_abs_dmod2": 1e-6},
    {"type": "modulus", "quantity": "A_bar", "t": 0.5, "t_unit": "T_cl", "expected_abs": 1, "tolerance": 1e-10},
    {"type": "modulus", "quantity": "A_bar", "t": 1.5, "t_unit": "T_cl", "expected_abs": 1, "tolerance": 1e-10}
  ]
})json"},
      {"inverted-runaway", R"json({
  "schema_version": 1,
  "name": "inverted-runaway",
  "description": "Inverted oscillator: |A|^2 decays as 2 exp(-w t) exp(-p0^2 / m w hbar)",
  "system": {"kind": "inverted", "omega_tilde": 1},
  "packet": {"alpha": 1, "x0": 0, "p0": 1},
  "time": {"t_max": 30, "unit": "1/omega_tilde", "n_samples": 301},
  "methods": ["analytic"],
  "checks": [{"type": "saturation", "rel_tolerance": 1e-3}]
})json"},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : presets()) names.push_back(name);
  return names;
}

std::optional<nlohmann::json> preset_config(const std::string& name) {
  for (const auto& [key, text] : presets())
    if (key == name) return nlohmann::json::parse(text);
  return std::nullopt;
}

}  // namespace wavepack::cli
