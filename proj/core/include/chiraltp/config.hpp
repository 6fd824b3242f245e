#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chiraltp/dynamics.hpp"
#include "chiraltp/lindblad.hpp"
#include "chiraltp/rotor.hpp"
#include "chiraltp/selection.hpp"

namespace chiraltp {

// Parsed run configuration: flat key-value text with dotted section keys.
//
//   # molecule: either a preset or inline constants
//   molecule.preset = propanediol-1,2
//   molecule.A_MHz = 8572.05          (inline alternative)
//   molecule.d_a_D = -1.201
//   molecule.handedness = L
//   triple.alpha = 1
//   triple.beta = 1
//   triple.gamma = 4
//   field.E0_kVcm = 10.0              (single point)
//   field.E0_grid_kVcm = 0:20:41      (linspace start:stop:count, or a
//                                      comma-separated list)
//   jmax = auto                       (or an integer)
//   drive.Omega1_MHz = 1.0
//   drive.Omega2_MHz = 1.0
//   drive.Delta1_MHz = 0.1
//   drive.Delta2_MHz = 0.4
//   drive.theta = 90 deg              (angles need a rad/deg unit tag)
//   drive.theta_f = 1.5707963267948966 rad
//   drive.theta_grid = -180:180:64 deg
//   decay.kappa_MHz = 0.1
//   time.t_max_us = 10.0
//   time.points = 1001
//   spectrum.levels = 6
//   output = out.csv
struct RunConfig {
  std::optional<std::string> preset_name;
  std::optional<MoleculeSpec> inline_molecule;
  Handedness handedness = Handedness::Left;

  TransitionTriple triple{1, 1, 4};

  std::optional<double> E0;          // kV/cm
  std::vector<double> E0_grid;       // kV/cm

  std::optional<int> J_max;          // nullopt = auto

  // Shipped defaults follow the paper's driven-cascade example:
  // Omega1 = Omega2 = 1 MHz, Delta1 = 0.1 MHz, Delta2 = 0.4 MHz,
  // theta_f = pi/2 (left-handed forbidden angle).
  BeamDrive drive{1.0, 1.0, 0.1, 0.4, 0.0, 1.5707963267948966};
  bool theta_set = false;
  bool omega2_set = false;  // absorption defaults to a weak probe when unset
  std::vector<double> theta_grid;    // rad

  DecayModel decay{};

  double t_max_us = 10.0;
  int t_points = 1001;
  int spectrum_levels = 6;

  std::string output;

  // Preset lookup or inline constants; defaults to propanediol-1,2.
  MoleculeSpec molecule() const;
};

// Throws ConfigError with line diagnostics on malformed input or unknown
// keys.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Emits a text form that parses back to a semantically identical config.
std::string serialize_config(const RunConfig& config);

// Shared grid syntax: "start:stop:count" linspace or comma-separated list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace chiraltp
