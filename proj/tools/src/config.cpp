#include "zigzag_app/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "zigzag/cavity_modes.hpp"
#include "zigzag/constants.hpp"

namespace zigzag::app {

namespace {

using constants::deg;
using constants::pi;

using Raw = std::map<std::pair<std::string, std::string>, std::string>;

struct KeyInfo {
  const char* section;
  const char* key;
  const char* description;
};

// clang-format off
constexpr KeyInfo kKeys[] = {
    {"cavity", "L_mm", "mirror separation, mm (exclusive with l_target_mm)"},
    {"cavity", "l_target_mm", "target beam separation, mm; L is derived (default 11)"},
    {"cavity", "R_mm", "mirror radius of curvature, mm (50)"},
    {"cavity", "lambda_nm", "wavelength, nm (780)"},
    {"cavity", "finesse_on", "on-axis finesse (880)"},
    {"cavity", "finesse_zig", "zigzag finesse (230)"},
    {"pendulum", "width_mm", "mirror center-to-center separation l, mm (11)"},
    {"pendulum", "height_mm", "height, mm (1)"},
    {"pendulum", "thickness_mm", "face-to-face thickness, mm (0)"},
    {"pendulum", "mass_mg", "mass, mg (6; exclusive with density_kg_m3)"},
    {"pendulum", "density_kg_m3", "density, kg/m^3; mass = density * volume"},
    {"pendulum", "delta_alpha_deg", "relative yaw bend of the faces, deg (0)"},
    {"pendulum", "delta_beta_deg", "relative pitch bend of the faces, deg (0)"},
    {"pendulum", "mirror_diameter_mm", "face mirror aperture, mm (0 = unbounded)"},
    {"pendulum", "hole_diameter_mm", "central hole, mm (0 = unchecked)"},
    {"pose", "yaw_deg", "yaw, deg (8.5)"},
    {"pose", "pitch_deg", "pitch, deg (0)"},
    {"pose", "roll_deg", "roll, deg (0)"},
    {"pose", "x_um", "centroid x offset, um (0)"},
    {"pose", "y_um", "centroid y offset, um (0)"},
    {"pose", "z_um", "centroid z offset, um (0)"},
    {"noise", "T_K", "temperature, K (300)"},
    {"noise", "l_mm", "pendulum width, mm (5)"},
    {"noise", "h_mm", "pendulum height, mm (1)"},
    {"noise", "t_mm", "pendulum thickness, mm (0.5)"},
    {"noise", "m_mg", "pendulum mass, mg (6)"},
    {"noise", "I_kg_m2", "yaw moment of inertia, kg m^2 (m l^2 / 12)"},
    {"noise", "fiber_D_um", "fiber diameter, um (1)"},
    {"noise", "f_m_mHz", "torsional frequency, mHz (10)"},
    {"noise", "Q_m", "yaw quality factor (2e4)"},
    {"noise", "sigma", "substrate Poisson ratio (0.15)"},
    {"noise", "E_GPa", "substrate Young's modulus, GPa (70)"},
    {"noise", "w0_um", "beam radius at the pendulum mirrors, um (100)"},
    {"noise", "phi_sub", "substrate loss angle (1e-7)"},
    {"noise", "phi_coat", "coating loss angle (1e-4)"},
    {"noise", "coating_d_um", "coating thickness, um (10)"},
    {"noise", "finesse", "cavity finesse (2e4)"},
    {"noise", "lambda_nm", "laser wavelength, nm (780)"},
    {"noise", "P_in_uW", "input power, uW (0.4)"},
    {"noise", "leak_delta_alpha_mdeg", "residual yaw bend for leakage, mdeg (60)"},
    {"noise", "xi_cm", "fiber length, cm (5)"},
    {"noise", "f_swing_Hz", "swing mode frequency, Hz (2)"},
    {"noise", "f_roll_Hz", "roll mode frequency, Hz (2)"},
    {"noise", "Q_swing", "swing quality factor (1e6)"},
    {"noise", "Q_roll", "roll quality factor (1e6)"},
    {"noise", "cavity_L_cm", "design cavity length, cm (5)"},
    {"noise", "cavity_R_cm", "design cavity mirror radius, cm (10)"},
    {"noise", "f_min_Hz", "grid start, Hz (0.1)"},
    {"noise", "f_max_Hz", "grid end, Hz (1000)"},
    {"noise", "points", "grid points, log spaced (400)"},
    {"noise", "convention", "shot-noise convention: sql | paper (sql)"},
    {"sweep", "dof", "yaw | pitch | roll | transverse | longitudinal | x-axis | z (yaw)"},
    {"sweep", "min_urad", "angular sweep start, urad (-1.5; pitch -1000)"},
    {"sweep", "max_urad", "angular sweep end, urad (1.5; pitch 1000)"},
    {"sweep", "min_um", "translation sweep start, um (-1)"},
    {"sweep", "max_um", "translation sweep end, um (1)"},
    {"sweep", "count", "grid points (31)"},
    {"output", "format", "csv | json (csv)"},
    {"output", "path", "output file (stdout)"},
    {"validate", "samples", "randomized oracle poses (1000)"},
    {"validate", "seed", "RNG seed (1)"},
    {"validate", "model_delta_alpha_offset_deg", "bend offset fed to the closed forms only, deg (0)"},
};
// clang-format on

bool known(const std::string& section, const std::string& key) {
  for (const auto& k : kKeys) {
    if (section == k.section && key == k.key) return true;
  }
  return false;
}

bool known_section(const std::string& section) {
  for (const auto& k : kKeys) {
    if (section == k.section) return true;
  }
  return false;
}

std::string env_name(const std::string& section, const std::string& key) {
  std::string name = "ZIGZAG_" + section + "_" + key;
  for (char& c : name) {
    c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return name;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  }
  return v;
}

long long to_integer(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(where + ": expected an integer, got '" + text + "'");
  }
  return v;
}

class Reader {
 public:
  explicit Reader(Raw raw) : raw_(std::move(raw)) {}

  bool has(const char* section, const char* key) const {
    return raw_.count({section, key}) != 0;
  }

  std::optional<double> number(const char* section, const char* key) const {
    const auto it = raw_.find({section, key});
    if (it == raw_.end()) return std::nullopt;
    return to_double(std::string(section) + "." + key, it->second);
  }

  std::optional<long long> integer(const char* section, const char* key) const {
    const auto it = raw_.find({section, key});
    if (it == raw_.end()) return std::nullopt;
    return to_integer(std::string(section) + "." + key, it->second);
  }

  std::optional<std::string> text(const char* section, const char* key) const {
    const auto it = raw_.find({section, key});
    if (it == raw_.end()) return std::nullopt;
    return trim(it->second);
  }

  void set(const char* section, const char* key, double scale, double& target) const {
    if (const auto v = number(section, key)) target = *v * scale;
  }

 private:
  Raw raw_;
};

Raw read_raw(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config parse error: " + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  Raw raw;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key '" + section + "' must be inside a [section]");
    }
    if (!known_section(section)) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!known(section, key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      raw[{section, key}] = value.data();
    }
  }
  return raw;
}

void apply_environment(Raw& raw) {
  for (const auto& k : kKeys) {
    if (const char* v = std::getenv(env_name(k.section, k.key).c_str())) {
      raw[{k.section, k.key}] = v;
    }
  }
}

void apply_cavity(const Reader& r, RunConfig& c) {
  r.set("cavity", "R_mm", 1e-3, c.cavity.radius);
  r.set("cavity", "lambda_nm", 1e-9, c.cavity.wavelength);
  r.set("cavity", "finesse_on", 1.0, c.cavity.finesse_on);
  r.set("cavity", "finesse_zig", 1.0, c.cavity.finesse_zig);
  const auto length = r.number("cavity", "L_mm");
  const auto target = r.number("cavity", "l_target_mm");
  if (length && target) throw ConfigError("[cavity] takes exactly one of L_mm and l_target_mm");
  if (length) {
    c.cavity.length = *length * 1e-3;
    c.l_target.reset();
  } else {
    c.l_target = target ? *target * 1e-3 : 11e-3;
    c.cavity.length = required_cavity_length(*c.l_target, c.cavity.radius);
  }
}

void apply_pendulum(const Reader& r, RunConfig& c) {
  auto& p = c.pendulum;
  r.set("pendulum", "width_mm", 1e-3, p.width);
  r.set("pendulum", "height_mm", 1e-3, p.height);
  r.set("pendulum", "thickness_mm", 1e-3, p.thickness);
  r.set("pendulum", "delta_alpha_deg", deg, p.delta_alpha);
  r.set("pendulum", "delta_beta_deg", deg, p.delta_beta);
  r.set("pendulum", "mirror_diameter_mm", 1e-3, p.mirror_diameter);
  r.set("pendulum", "hole_diameter_mm", 1e-3, p.hole_diameter);
  const auto mass = r.number("pendulum", "mass_mg");
  const auto density = r.number("pendulum", "density_kg_m3");
  if (mass && density) throw ConfigError("[pendulum] takes at most one of mass_mg and density_kg_m3");
  if (mass) p.mass = *mass * 1e-6;
  if (density) p.mass = *density * p.width * p.height * p.thickness;
}

void apply_pose(const Reader& r, RunConfig& c) {
  r.set("pose", "yaw_deg", deg, c.pose.yaw);
  r.set("pose", "pitch_deg", deg, c.pose.pitch);
  r.set("pose", "roll_deg", deg, c.pose.roll);
  r.set("pose", "x_um", 1e-6, c.pose.translation.x);
  r.set("pose", "y_um", 1e-6, c.pose.translation.y);
  r.set("pose", "z_um", 1e-6, c.pose.translation.z);
}

void apply_noise(const Reader& r, RunConfig& c) {
  auto& n = c.noise;
  r.set("noise", "T_K", 1.0, n.temperature);
  r.set("noise", "l_mm", 1e-3, n.width);
  r.set("noise", "h_mm", 1e-3, n.height);
  r.set("noise", "t_mm", 1e-3, n.thickness);
  r.set("noise", "m_mg", 1e-6, n.mass);
  if (const auto v = r.number("noise", "I_kg_m2")) n.inertia = *v;
  r.set("noise", "fiber_D_um", 1e-6, n.fiber_diameter);
  if (const auto v = r.number("noise", "f_m_mHz")) n.omega_m = 2.0 * pi * *v * 1e-3;
  r.set("noise", "Q_m", 1.0, n.q_m);
  r.set("noise", "sigma", 1.0, n.poisson);
  r.set("noise", "E_GPa", 1e9, n.youngs_modulus);
  r.set("noise", "w0_um", 1e-6, n.waist);
  r.set("noise", "phi_sub", 1.0, n.phi_sub);
  r.set("noise", "phi_coat", 1.0, n.phi_coat);
  r.set("noise", "coating_d_um", 1e-6, n.coating_thickness);
  r.set("noise", "finesse", 1.0, n.finesse);
  r.set("noise", "lambda_nm", 1e-9, n.wavelength);
  r.set("noise", "P_in_uW", 1e-6, n.input_power);
  r.set("noise", "leak_delta_alpha_mdeg", 1e-3 * deg, n.leak_delta_alpha);
  r.set("noise", "xi_cm", 1e-2, n.fiber_length);
  r.set("noise", "f_swing_Hz", 1.0, n.swing_frequency);
  r.set("noise", "f_roll_Hz", 1.0, n.roll_frequency);
  r.set("noise", "Q_swing", 1.0, n.swing_q);
  r.set("noise", "Q_roll", 1.0, n.roll_q);
  r.set("noise", "cavity_L_cm", 1e-2, n.cavity_length);
  r.set("noise", "cavity_R_cm", 1e-2, n.cavity_radius);
  r.set("noise", "f_min_Hz", 1.0, c.f_min);
  r.set("noise", "f_max_Hz", 1.0, c.f_max);
  if (const auto v = r.integer("noise", "points")) c.points = static_cast<int>(*v);
  if (const auto v = r.text("noise", "convention")) {
    const auto conv = parse_shot_convention(*v);
    if (!conv) throw ConfigError("noise.convention must be sql or paper, got '" + *v + "'");
    c.convention = *conv;
  }
}

void apply_sweep(const Reader& r, RunConfig& c) {
  auto& s = c.sweep;
  if (const auto v = r.text("sweep", "dof")) {
    const auto dof = parse_dof(*v);
    if (!dof) throw ConfigError("sweep.dof: unknown degree of freedom '" + *v + "'");
    s.dof = *dof;
  }
  const bool angular = is_angular(s.dof);
  const char* min_key = angular ? "min_urad" : "min_um";
  const char* max_key = angular ? "max_urad" : "max_um";
  const char* wrong_min = angular ? "min_um" : "min_urad";
  const char* wrong_max = angular ? "max_um" : "max_urad";
  if (r.has("sweep", wrong_min) || r.has("sweep", wrong_max)) {
    throw ConfigError(std::string("sweep over ") + std::string(to_string(s.dof)) + " takes " +
                      min_key + "/" + max_key);
  }
  if (s.dof == Dof::pitch) {
    s.min = -1e-3;
    s.max = 1e-3;
  } else if (angular) {
    s.min = -1.5e-6;
    s.max = 1.5e-6;
  } else {
    s.min = -1e-6;
    s.max = 1e-6;
  }
  r.set("sweep", min_key, 1e-6, s.min);
  r.set("sweep", max_key, 1e-6, s.max);
  if (const auto v = r.integer("sweep", "count")) s.count = static_cast<int>(*v);
  if (s.count < 2) throw ConfigError("sweep.count must be at least 2");
  if (!(s.max > s.min)) throw ConfigError("sweep range must have max > min");
}

void apply_output(const Reader& r, RunConfig& c) {
  if (const auto v = r.text("output", "format")) {
    const auto f = parse_format(*v);
    if (!f) throw ConfigError("output.format must be csv or json, got '" + *v + "'");
    c.format = *f;
  }
  if (const auto v = r.text("output", "path")) c.output_path = *v;
}

void apply_validate(const Reader& r, RunConfig& c) {
  if (const auto v = r.integer("validate", "samples")) {
    if (*v < 1) throw ConfigError("validate.samples must be positive");
    c.validate.samples = static_cast<int>(*v);
  }
  if (const auto v = r.integer("validate", "seed")) {
    c.validate.seed = static_cast<std::uint64_t>(*v);
  }
  r.set("validate", "model_delta_alpha_offset_deg", deg, c.validate.model_delta_alpha_offset);
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

RunConfig parse_config(const std::string& text, bool use_environment) {
  Raw raw = read_raw(text);
  if (use_environment) apply_environment(raw);
  const Reader reader(std::move(raw));
  RunConfig c;
  apply_cavity(reader, c);
  apply_pendulum(reader, c);
  apply_pose(reader, c);
  apply_noise(reader, c);
  apply_sweep(reader, c);
  apply_output(reader, c);
  apply_validate(reader, c);
  return c;
}

RunConfig load_config(const std::string& path, bool use_environment) {
  if (path.empty()) return parse_config("", use_environment);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), use_environment);
}

std::string config_reference() {
  std::ostringstream out;
  std::string section;
  for (const auto& k : kKeys) {
    if (section != k.section) {
      section = k.section;
      out << "[" << section << "]\n";
    }
    out << "  " << k.key << "  " << k.description << "   env " << env_name(k.section, k.key)
        << "\n";
  }
  return out.str();
}

}  // namespace zigzag::app
