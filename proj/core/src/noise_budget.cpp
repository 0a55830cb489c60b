#include "zigzag/noise_budget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

using constants::boltzmann;
using constants::hbar;
using constants::pi;
using constants::speed_of_light;

double mode_susceptibility_sq(double omega, double inertia, double omega_mode, double q) {
  const double gamma = damping_rate(omega, omega_mode, q);
  const double detune = omega_mode * omega_mode - omega * omega;
  return 1.0 / (inertia * inertia * (detune * detune + omega * gamma * omega * gamma));
}

double thermal_drive(double omega, double temperature, double inertia, double omega_mode,
                     double q) {
  return 4.0 * boltzmann * temperature * inertia * damping_rate(omega, omega_mode, q);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive");
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be non-negative");
  }
}

}  // namespace

double NoiseParams::moment_of_inertia() const {
  return inertia ? *inertia : mass * width * width / 12.0;
}

double NoiseParams::roll_inertia() const {
  return mass * (width * width + height * height) / 12.0;
}

double NoiseParams::laser_angular_frequency() const {
  return 2.0 * pi * speed_of_light / wavelength;
}

void NoiseParams::validate() const {
  require_nonnegative(temperature, "temperature");
  require_positive(width, "width");
  require_positive(height, "height");
  require_positive(thickness, "thickness");
  require_positive(mass, "mass");
  if (inertia) require_positive(*inertia, "moment of inertia");
  require_positive(fiber_diameter, "fiber diameter");
  require_positive(omega_m, "torsional frequency");
  require_positive(q_m, "Q_m");
  if (!(poisson >= 0.0 && poisson < 0.5)) throw DomainError("Poisson ratio must be in [0, 0.5)");
  require_positive(youngs_modulus, "Young's modulus");
  require_positive(waist, "beam radius");
  require_nonnegative(phi_sub, "phi_sub");
  require_nonnegative(phi_coat, "phi_coat");
  require_nonnegative(coating_thickness, "coating thickness");
  require_positive(finesse, "finesse");
  require_positive(wavelength, "wavelength");
  require_nonnegative(input_power, "input power");
  require_nonnegative(leak_delta_alpha, "leakage bend");
  require_positive(fiber_length, "fiber length");
  require_positive(swing_frequency, "swing frequency");
  require_positive(roll_frequency, "roll frequency");
  require_positive(swing_q, "swing Q");
  require_positive(roll_q, "roll Q");
  require_positive(cavity_length, "cavity length");
  require_positive(cavity_radius, "cavity radius");
}

std::optional<ShotConvention> parse_shot_convention(std::string_view name) {
  if (name == "sql") return ShotConvention::sql;
  if (name == "paper") return ShotConvention::paper;
  return std::nullopt;
}

std::string_view to_string(ShotConvention c) {
  return c == ShotConvention::sql ? "sql" : "paper";
}

double damping_rate(double omega, double omega_mode, double q) {
  return omega_mode / q * (omega_mode / omega);
}

double susceptibility_sq(double omega, const NoiseParams& p) {
  return mode_susceptibility_sq(omega, p.moment_of_inertia(), p.omega_m, p.q_m);
}

double psd_suspension_thermal(double omega, const NoiseParams& p) {
  return thermal_drive(omega, p.temperature, p.moment_of_inertia(), p.omega_m, p.q_m);
}

double psd_qrpn(const NoiseParams& p) {
  const double l2 = p.width * p.width;
  const double f2 = p.finesse * p.finesse;
  return 8.0 * l2 * f2 * hbar * p.laser_angular_frequency() * p.input_power /
         (pi * pi * speed_of_light * speed_of_light);
}

double psd_shot(const NoiseParams& p, ShotConvention convention) {
  if (!(p.input_power > 0.0)) throw DomainError("shot noise is undefined for zero input power");
  const double qrpn = psd_qrpn(p);
  return convention == ShotConvention::sql ? hbar * hbar / qrpn : hbar / qrpn;
}

double psd_mirror_brownian(double omega, const NoiseParams& p) {
  const double s = p.poisson;
  const double coating = 2.0 / std::sqrt(pi) * (1.0 - 2.0 * s) / (1.0 - s) *
                         (p.coating_thickness / p.waist) * p.phi_coat;
  return 16.0 * boltzmann * p.temperature / (omega * p.width * p.width) * (1.0 - s * s) /
         (std::sqrt(pi) * p.youngs_modulus * p.waist) * (p.phi_sub + coating);
}

SensitivityReport design_sensitivity(const NoiseParams& p) {
  CavityConfig cfg{p.cavity_length, p.cavity_radius, p.wavelength, p.finesse, p.finesse, {}};
  cfg.validate();
  const ModeGeometry mode = mode_geometry(cfg, p.width, 0.0);
  return closed_form_report(cfg, mode, p.leak_delta_alpha);
}

double leakage_psd(LeakMode mode, double omega, const NoiseParams& p,
                   const SensitivityReport& sens) {
  if (sens.yaw_hz_per_rad == 0.0) throw DomainError("yaw slope is zero");
  double displacement_psd = 0.0;
  if (mode == LeakMode::swing) {
    const double w = 2.0 * pi * p.swing_frequency;
    const double force = thermal_drive(omega, p.temperature, p.mass, w, p.swing_q);
    displacement_psd = force * mode_susceptibility_sq(omega, p.mass, w, p.swing_q);
  } else {
    const double w = 2.0 * pi * p.roll_frequency;
    const double inertia = p.roll_inertia();
    const double torque = thermal_drive(omega, p.temperature, inertia, w, p.roll_q);
    const double roll_psd = torque * mode_susceptibility_sq(omega, inertia, w, p.roll_q);
    const double coupling = roll_mode_translation(1.0, inertia, p.fiber_length, p.mass);
    displacement_psd = coupling * coupling * roll_psd;
  }
  const double ratio = sens.transverse_hz_per_m / sens.yaw_hz_per_rad;
  return ratio * ratio * displacement_psd;
}

const NoiseSource& NoiseBudget::source(std::string_view name) const {
  for (const auto& s : sources) {
    if (s.name == name) return s;
  }
  if (total.name == name) return total;
  throw std::out_of_range("no noise source named " + std::string(name));
}

std::vector<double> log_grid(double f_min, double f_max, int count) {
  if (!(f_min > 0.0) || !(f_max > f_min) || count < 2) {
    throw DomainError("log grid needs 0 < f_min < f_max and at least two points");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double a = std::log10(f_min);
  const double b = std::log10(f_max);
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (count - 1));
  }
  grid.front() = f_min;
  grid.back() = f_max;
  return grid;
}

NoiseBudget total_budget(const NoiseParams& p, std::span<const double> freq_hz,
                         ShotConvention convention) {
  p.validate();
  for (std::size_t i = 0; i < freq_hz.size(); ++i) {
    if (!(freq_hz[i] > 0.0)) throw DomainError("frequency grid must be positive");
    if (i > 0 && !(freq_hz[i] > freq_hz[i - 1])) {
      throw DomainError("frequency grid must be strictly ascending");
    }
  }

  NoiseBudget b;
  b.params = p;
  b.convention = convention;
  b.freq_hz.assign(freq_hz.begin(), freq_hz.end());
  const SensitivityReport sens = design_sensitivity(p);
  b.yaw_slope_hz_per_rad = sens.yaw_hz_per_rad;
  const double slope2 = sens.yaw_hz_per_rad * sens.yaw_hz_per_rad;

  const std::size_t n = freq_hz.size();
  b.susceptibility_sq.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.susceptibility_sq[i] = susceptibility_sq(2.0 * pi * freq_hz[i], p);
  }

  const auto torque_source = [&](std::string name, auto&& psd) {
    NoiseSource s{std::move(name), {}, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const double tau = psd(2.0 * pi * freq_hz[i]);
      s.torque.push_back(tau);
      s.angle.push_back(b.susceptibility_sq[i] * tau);
      s.frequency.push_back(slope2 * s.angle.back());
    }
    return s;
  };
  const auto angle_source = [&](std::string name, auto&& psd) {
    NoiseSource s{std::move(name), {}, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = psd(2.0 * pi * freq_hz[i]);
      s.angle.push_back(theta);
      s.torque.push_back(theta / b.susceptibility_sq[i]);
      s.frequency.push_back(slope2 * theta);
    }
    return s;
  };

  b.sources.push_back(torque_source(
      "suspension_thermal", [&](double w) { return psd_suspension_thermal(w, p); }));
  const double qrpn = psd_qrpn(p);
  b.sources.push_back(torque_source("qrpn", [&](double) { return qrpn; }));
  const double shot = p.input_power > 0.0 ? psd_shot(p, convention) : 0.0;
  b.sources.push_back(angle_source("shot", [&](double) { return shot; }));
  b.sources.push_back(
      angle_source("mirror_brownian", [&](double w) { return psd_mirror_brownian(w, p); }));
  b.sources.push_back(angle_source(
      "swing_leakage", [&](double w) { return leakage_psd(LeakMode::swing, w, p, sens); }));
  b.sources.push_back(angle_source(
      "roll_leakage", [&](double w) { return leakage_psd(LeakMode::roll, w, p, sens); }));

  b.total.name = "total";
  b.total.torque.assign(n, 0.0);
  b.total.angle.assign(n, 0.0);
  b.total.frequency.assign(n, 0.0);
  for (const auto& s : b.sources) {
    for (std::size_t i = 0; i < n; ++i) {
      b.total.torque[i] += s.torque[i];
      b.total.angle[i] += s.angle[i];
      b.total.frequency[i] += s.frequency[i];
    }
  }
  return b;
}

double rms_mode_shift(RmsMode mode, const RmsParams& p, const SensitivityReport& sens) {
  if (!(p.temperature >= 0.0) || !(p.mass() > 0.0) || !(p.fiber_length > 0.0)) {
    throw DomainError("rms parameters must be positive");
  }
  const double kb_t = boltzmann * p.temperature;
  const double m = p.mass();
  switch (mode) {
    case RmsMode::yaw: {
      const double inertia = m * (p.width * p.width + p.thickness * p.thickness) / 12.0;
      const double w = 2.0 * pi * p.yaw_frequency;
      return std::abs(sens.yaw_hz_per_rad) * std::sqrt(kb_t / (inertia * w * w));
    }
    case RmsMode::swing: {
      const double w = 2.0 * pi * p.swing_frequency;
      return std::abs(sens.transverse_hz_per_m) * std::sqrt(kb_t / (m * w * w));
    }
    case RmsMode::roll: {
      const double inertia = m * (p.width * p.width + p.height * p.height) / 12.0;
      const double w = 2.0 * pi * p.roll_frequency;
      const double roll = std::sqrt(kb_t / (inertia * w * w));
      return std::abs(sens.transverse_hz_per_m *
                      roll_mode_translation(roll, inertia, p.fiber_length, m));
    }
  }
  return 0.0;
}

}  // namespace zigzag
