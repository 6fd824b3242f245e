// Command-line front end: Stark spectra, forbidden polarization angles,
// cascade dynamics, time-averaged populations, and steady-state absorption,
// emitted as CSV for plotting.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "chiraltp/config.hpp"
#include "chiraltp/csv.hpp"
#include "chiraltp/dynamics.hpp"
#include "chiraltp/errors.hpp"
#include "chiraltp/lindblad.hpp"
#include "chiraltp/rotor.hpp"
#include "chiraltp/selection.hpp"
#include "chiraltp/stark.hpp"

namespace {

using namespace chiraltp;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string preset_override;
  std::string jmax_override;
  bool schema = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "Run configuration file");
  cmd->add_option("--out", opts.out_path, "Output CSV path (default stdout)");
  cmd->add_option("--preset", opts.preset_override, "Molecule preset name");
  cmd->add_option("--jmax", opts.jmax_override,
                  "Basis truncation: an integer or 'auto'");
  cmd->add_flag("--schema", opts.schema, "Print the CSV columns and exit");
}

RunConfig load(const CommonOpts& opts) {
  RunConfig cfg;
  if (!opts.config_path.empty()) cfg = load_config_file(opts.config_path);
  if (!opts.preset_override.empty()) {
    cfg.preset_name = opts.preset_override;
    cfg.inline_molecule.reset();
    preset(opts.preset_override);  // validate early, lists presets on error
  }
  if (!opts.jmax_override.empty()) {
    if (opts.jmax_override == "auto") {
      cfg.J_max.reset();
    } else {
      try {
        cfg.J_max = std::stoi(opts.jmax_override);
      } catch (const std::exception&) {
        throw ConfigError("--jmax expects an integer or 'auto'");
      }
    }
  }
  return cfg;
}

int resolve_J_max(const RunConfig& cfg, const MoleculeSpec& mol,
                  double E0_max, int levels_needed) {
  if (cfg.J_max.has_value()) {
    if (*cfg.J_max < 2) throw ConfigError("jmax must be >= 2");
    return *cfg.J_max;
  }
  int J = 0;
  for (const int M : {0, 1, -1}) {
    J = std::max(J, converge_J_max(mol.with_handedness(Handedness::Left),
                                   E0_max, M, levels_needed, 1e-8));
  }
  // Energies converge before eigenvector tails; keep a margin for the
  // dipole contractions.
  return J + 2;
}

std::vector<double> field_grid(const RunConfig& cfg, bool allow_single) {
  if (!cfg.E0_grid.empty() && cfg.E0.has_value()) {
    throw ConfigError(
        "give either field.E0_kVcm or field.E0_grid_kVcm, not both");
  }
  if (!cfg.E0_grid.empty()) return cfg.E0_grid;
  if (allow_single && cfg.E0.has_value()) return {*cfg.E0};
  throw ConfigError(allow_single
                        ? "missing field.E0_kVcm or field.E0_grid_kVcm"
                        : "missing field.E0_grid_kVcm");
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 64; ++k) {
    grid.push_back(-std::numbers::pi + k * (2.0 * std::numbers::pi / 64.0));
  }
  return grid;
}

int cmd_spectrum(const CommonOpts& opts) {
  const std::vector<std::string> header = {"E0_kVcm", "M", "xi", "energy_MHz"};
  if (opts.schema) {
    std::cout << "E0_kVcm,M,xi,energy_MHz\n";
    return 0;
  }
  const RunConfig cfg = load(opts);
  const MoleculeSpec mol = cfg.molecule();
  const auto grid = field_grid(cfg, /*allow_single=*/true);
  const double E0_max = *std::max_element(grid.begin(), grid.end());
  const int J_max = resolve_J_max(cfg, mol, E0_max, cfg.spectrum_levels);

  CsvWriter csv(header);
  for (const double E0 : grid) {
    for (const int M : {0, 1, -1}) {
      const auto sys = diagonalize_block(mol, E0, M, J_max);
      const int levels = std::min(cfg.spectrum_levels, sys.dim());
      for (int xi = 1; xi <= levels; ++xi) {
        csv.add_row({format_number(E0), std::to_string(M), std::to_string(xi),
                     format_number(sys.energy(xi))});
      }
    }
  }
  csv.commit(opts.out_path.empty() ? cfg.output : opts.out_path);
  return 0;
}

int cmd_theta_f(const CommonOpts& opts) {
  if (opts.schema) {
    std::cout << "E0_kVcm,theta_f_L_rad,theta_f_R_rad,D\n";
    return 0;
  }
  const RunConfig cfg = load(opts);
  const MoleculeSpec mol = cfg.molecule().with_handedness(Handedness::Left);
  const auto grid = field_grid(cfg, /*allow_single=*/false);
  const double E0_max = *std::max_element(grid.begin(), grid.end());
  const int levels =
      std::max({cfg.triple.alpha, cfg.triple.beta, cfg.triple.gamma}) + 2;
  const int J_max = resolve_J_max(cfg, mol, E0_max, levels);

  const auto rows = sweep_field(mol, cfg.triple, grid, J_max);
  CsvWriter csv({"E0_kVcm", "theta_f_L_rad", "theta_f_R_rad", "D"});
  for (const auto& row : rows) {
    if (row.defined) {
      csv.add_row({format_number(row.E0), format_number(row.theta_f_left),
                   format_number(row.theta_f_right),
                   format_number(row.degree)});
    } else {
      csv.add_row({format_number(row.E0), "undefined", "undefined",
                   "undefined"});
    }
  }
  csv.commit(opts.out_path.empty() ? cfg.output : opts.out_path);
  return 0;
}

int cmd_dynamics(const CommonOpts& opts) {
  if (opts.schema) {
    std::cout << "t_us,P_gamma_L,P_gamma_R\n";
    return 0;
  }
  const RunConfig cfg = load(opts);
  if (cfg.t_points < 2) throw ConfigError("time.points must be >= 2");
  if (cfg.t_max_us <= 0.0) throw ConfigError("time.t_max_us must be > 0");

  std::vector<double> t_grid(static_cast<std::size_t>(cfg.t_points));
  for (int i = 0; i < cfg.t_points; ++i) {
    t_grid[static_cast<std::size_t>(i)] =
        cfg.t_max_us * double(i) / double(cfg.t_points - 1);
  }
  const Eigen::Vector4cd initial(1.0, 0.0, 0.0, 0.0);
  const BeamDrive left = cfg.drive;
  const BeamDrive right = with_flipped_handedness(left);
  const auto states_L = evolve(left, initial, t_grid);
  const auto states_R = evolve(right, initial, t_grid);

  CsvWriter csv({"t_us", "P_gamma_L", "P_gamma_R"});
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    csv.add_row({format_number(t_grid[i]),
                 format_number(std::norm(states_L[i](3))),
                 format_number(std::norm(states_R[i](3)))});
  }
  csv.commit(opts.out_path.empty() ? cfg.output : opts.out_path);
  return 0;
}

int cmd_pbar(const CommonOpts& opts) {
  if (opts.schema) {
    std::cout << "theta_rad,Pbar_gamma_L,Pbar_gamma_R\n";
    return 0;
  }
  const RunConfig cfg = load(opts);
  const auto grid =
      cfg.theta_grid.empty() ? default_theta_grid() : cfg.theta_grid;
  const Eigen::Vector4cd initial(1.0, 0.0, 0.0, 0.0);

  CsvWriter csv({"theta_rad", "Pbar_gamma_L", "Pbar_gamma_R"});
  for (const double theta : grid) {
    BeamDrive left = cfg.drive;
    left.theta = theta;
    const BeamDrive right = with_flipped_handedness(left);
    csv.add_row({format_number(theta),
                 format_number(time_averaged_P_gamma(left, initial)),
                 format_number(time_averaged_P_gamma(right, initial))});
  }
  csv.commit(opts.out_path.empty() ? cfg.output : opts.out_path);
  return 0;
}

int cmd_absorption(const CommonOpts& opts) {
  if (opts.schema) {
    std::cout << "theta_rad,A_L,A_R\n";
    return 0;
  }
  RunConfig cfg = load(opts);
  if (cfg.decay.kappa <= 0.0) {
    throw ConfigError("steady state requires dissipation: decay.kappa_MHz > 0");
  }
  // Probe beam: weak by default so the absorption signal stays linear.
  if (!cfg.omega2_set) cfg.drive.Omega2 = 0.1;
  const auto grid =
      cfg.theta_grid.empty() ? default_theta_grid() : cfg.theta_grid;
  const auto rows = absorption_sweep(cfg.drive, cfg.decay, grid);

  CsvWriter csv({"theta_rad", "A_L", "A_R"});
  for (const auto& row : rows) {
    csv.add_row({format_number(row.theta), format_number(row.A_left),
                 format_number(row.A_right)});
  }
  csv.commit(opts.out_path.empty() ? cfg.output : opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enantiospecific two-photon selection-rule simulator"};
  app.require_subcommand(1);

  CommonOpts spectrum_opts, theta_opts, dyn_opts, pbar_opts, abs_opts;
  auto* spectrum =
      app.add_subcommand("spectrum", "Stark level energies per M-block");
  add_common(spectrum, spectrum_opts);
  auto* theta_f = app.add_subcommand(
      "theta-f", "Forbidden angles theta_f^(L,R) and degree D over E0");
  add_common(theta_f, theta_opts);
  auto* dynamics = app.add_subcommand(
      "dynamics", "Closed-system P_gamma(t) for both enantiomers");
  add_common(dynamics, dyn_opts);
  auto* pbar = app.add_subcommand(
      "pbar", "Time-averaged P_gamma over the polarization angle");
  add_common(pbar, pbar_opts);
  auto* absorption = app.add_subcommand(
      "absorption", "Steady-state beam-2 absorption over the angle");
  add_common(absorption, abs_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts);
    if (theta_f->parsed()) return cmd_theta_f(theta_opts);
    if (dynamics->parsed()) return cmd_dynamics(dyn_opts);
    if (pbar->parsed()) return cmd_pbar(pbar_opts);
    if (absorption->parsed()) return cmd_absorption(abs_opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return 0;
}
