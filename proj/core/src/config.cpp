#include "chiraltp/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "chiraltp/dynamics.hpp"
#include "chiraltp/errors.hpp"

namespace chiraltp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "config line " << line << ": " << what;
  throw ConfigError(msg.str());
}

double parse_number(const std::string& value, int line) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + value + "'");
  }
  if (trim(value.substr(pos)) != "") {
    fail(line, "trailing characters after number in '" + value + "'");
  }
  return x;
}

int parse_int(const std::string& value, int line) {
  const double x = parse_number(value, line);
  const int i = static_cast<int>(std::lround(x));
  if (x != static_cast<double>(i)) fail(line, "expected an integer");
  return i;
}

// Angles require a unit tag: "<number> rad" or "<number> deg".
double parse_angle(const std::string& value, int line) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    fail(line, "expected '<number> rad|deg', got '" + value + "'");
  }
  const std::string unit = trim(value.substr(pos));
  if (unit == "rad") return wrap_principal_angle(x);
  if (unit == "deg") return wrap_principal_angle(x * std::numbers::pi / 180.0);
  fail(line, "angle needs a 'rad' or 'deg' unit tag, got '" + value + "'");
}

std::vector<double> parse_grid_impl(const std::string& text, int line,
                                    double unit_scale) {
  const std::string body = trim(text);
  if (body.empty()) fail(line, "empty grid");
  std::vector<double> grid;
  if (body.find(':') != std::string::npos) {
    // start:stop:count linspace
    std::istringstream in(body);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
        !std::getline(in, c)) {
      fail(line, "grid must be start:stop:count or a comma list");
    }
    const double start = parse_number(trim(a), line);
    const double stop = parse_number(trim(b), line);
    const int count = parse_int(trim(c), line);
    if (count < 1) fail(line, "grid count must be >= 1");
    for (int i = 0; i < count; ++i) {
      const double t = (count == 1) ? 0.0 : double(i) / double(count - 1);
      grid.push_back((start + t * (stop - start)) * unit_scale);
    }
  } else {
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      grid.push_back(parse_number(trim(item), line) * unit_scale);
    }
  }
  return grid;
}

// Grid of angles: the unit tag comes after the grid expression.
std::vector<double> parse_angle_grid(const std::string& value, int line) {
  const std::string body = trim(value);
  double scale = 0.0;
  std::string expr;
  if (body.size() > 3 && body.substr(body.size() - 3) == "rad") {
    scale = 1.0;
    expr = body.substr(0, body.size() - 3);
  } else if (body.size() > 3 && body.substr(body.size() - 3) == "deg") {
    scale = std::numbers::pi / 180.0;
    expr = body.substr(0, body.size() - 3);
  } else {
    fail(line, "angle grid needs a trailing 'rad' or 'deg' unit tag");
  }
  auto grid = parse_grid_impl(expr, line, scale);
  for (double& v : grid) v = wrap_principal_angle(v);
  return grid;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  return parse_grid_impl(text, 0, 1.0);
}

MoleculeSpec RunConfig::molecule() const {
  MoleculeSpec mol;
  if (inline_molecule.has_value()) {
    mol = *inline_molecule;
  } else {
    mol = preset(preset_name.value_or("propanediol-1,2"));
  }
  mol.handedness = handedness;
  mol.validate();
  return mol;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  // Inline molecule fields accumulate here; only used if any was given.
  MoleculeSpec inline_mol;
  bool any_inline = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "missing key");
    if (value.empty()) fail(line_no, "missing value for key '" + key + "'");

    if (key == "molecule.preset") {
      cfg.preset_name = value;
    } else if (key == "molecule.A_MHz") {
      inline_mol.A = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.B_MHz") {
      inline_mol.B = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.C_MHz") {
      inline_mol.C = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.d_a_D") {
      inline_mol.d_a = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.d_b_D") {
      inline_mol.d_b = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.d_c_D") {
      inline_mol.d_c = parse_number(value, line_no);
      any_inline = true;
    } else if (key == "molecule.handedness") {
      if (value == "L") {
        cfg.handedness = Handedness::Left;
      } else if (value == "R") {
        cfg.handedness = Handedness::Right;
      } else {
        fail(line_no, "handedness must be L or R");
      }
    } else if (key == "triple.alpha") {
      cfg.triple.alpha = parse_int(value, line_no);
    } else if (key == "triple.beta") {
      cfg.triple.beta = parse_int(value, line_no);
    } else if (key == "triple.gamma") {
      cfg.triple.gamma = parse_int(value, line_no);
    } else if (key == "field.E0_kVcm") {
      cfg.E0 = parse_number(value, line_no);
    } else if (key == "field.E0_grid_kVcm") {
      cfg.E0_grid = parse_grid_impl(value, line_no, 1.0);
    } else if (key == "jmax") {
      if (value == "auto") {
        cfg.J_max.reset();
      } else {
        cfg.J_max = parse_int(value, line_no);
      }
    } else if (key == "drive.Omega1_MHz") {
      cfg.drive.Omega1 = parse_number(value, line_no);
    } else if (key == "drive.Omega2_MHz") {
      cfg.drive.Omega2 = parse_number(value, line_no);
      cfg.omega2_set = true;
    } else if (key == "drive.Delta1_MHz") {
      cfg.drive.Delta1 = parse_number(value, line_no);
    } else if (key == "drive.Delta2_MHz") {
      cfg.drive.Delta2 = parse_number(value, line_no);
    } else if (key == "drive.theta") {
      cfg.drive.theta = parse_angle(value, line_no);
      cfg.theta_set = true;
    } else if (key == "drive.theta_f") {
      cfg.drive.theta_f = parse_angle(value, line_no);
    } else if (key == "drive.theta_grid") {
      cfg.theta_grid = parse_angle_grid(value, line_no);
    } else if (key == "decay.kappa_MHz") {
      cfg.decay.kappa = parse_number(value, line_no);
    } else if (key == "time.t_max_us") {
      cfg.t_max_us = parse_number(value, line_no);
    } else if (key == "time.points") {
      cfg.t_points = parse_int(value, line_no);
    } else if (key == "spectrum.levels") {
      cfg.spectrum_levels = parse_int(value, line_no);
    } else if (key == "output") {
      cfg.output = value;
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (any_inline) {
    if (cfg.preset_name.has_value()) {
      throw ConfigError(
          "config: give either molecule.preset or inline molecule.* "
          "constants, not both");
    }
    cfg.inline_molecule = inline_mol;
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  if (cfg.inline_molecule.has_value()) {
    const auto& m = *cfg.inline_molecule;
    out << "molecule.A_MHz = " << m.A << "\n";
    out << "molecule.B_MHz = " << m.B << "\n";
    out << "molecule.C_MHz = " << m.C << "\n";
    out << "molecule.d_a_D = " << m.d_a << "\n";
    out << "molecule.d_b_D = " << m.d_b << "\n";
    out << "molecule.d_c_D = " << m.d_c << "\n";
  } else if (cfg.preset_name.has_value()) {
    out << "molecule.preset = " << *cfg.preset_name << "\n";
  }
  out << "molecule.handedness = " << handedness_tag(cfg.handedness) << "\n";
  out << "triple.alpha = " << cfg.triple.alpha << "\n";
  out << "triple.beta = " << cfg.triple.beta << "\n";
  out << "triple.gamma = " << cfg.triple.gamma << "\n";
  if (cfg.E0.has_value()) out << "field.E0_kVcm = " << *cfg.E0 << "\n";
  if (!cfg.E0_grid.empty()) {
    out << "field.E0_grid_kVcm = ";
    for (std::size_t i = 0; i < cfg.E0_grid.size(); ++i) {
      if (i) out << ",";
      out << cfg.E0_grid[i];
    }
    out << "\n";
  }
  out << "jmax = ";
  if (cfg.J_max.has_value()) {
    out << *cfg.J_max;
  } else {
    out << "auto";
  }
  out << "\n";
  out << "drive.Omega1_MHz = " << cfg.drive.Omega1 << "\n";
  out << "drive.Omega2_MHz = " << cfg.drive.Omega2 << "\n";
  out << "drive.Delta1_MHz = " << cfg.drive.Delta1 << "\n";
  out << "drive.Delta2_MHz = " << cfg.drive.Delta2 << "\n";
  if (cfg.theta_set) out << "drive.theta = " << cfg.drive.theta << " rad\n";
  out << "drive.theta_f = " << cfg.drive.theta_f << " rad\n";
  if (!cfg.theta_grid.empty()) {
    out << "drive.theta_grid = ";
    for (std::size_t i = 0; i < cfg.theta_grid.size(); ++i) {
      if (i) out << ",";
      out << cfg.theta_grid[i];
    }
    out << " rad\n";
  }
  out << "decay.kappa_MHz = " << cfg.decay.kappa << "\n";
  out << "time.t_max_us = " << cfg.t_max_us << "\n";
  out << "time.points = " << cfg.t_points << "\n";
  out << "spectrum.levels = " << cfg.spectrum_levels << "\n";
  if (!cfg.output.empty()) out << "output = " << cfg.output << "\n";
  return out.str();
}

}  // namespace chiraltp
