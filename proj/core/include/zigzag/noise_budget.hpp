#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/constants.hpp"
#include "zigzag/sensitivity.hpp"

namespace zigzag {

/// Parameters of the envisioned milligram-scale torsion pendulum. Defaults
/// are the anticipated experimental values; the cavity entries describe the
/// 5 cm / 10 cm design cavity used for the cavity-frequency axis.
struct NoiseParams {
  double temperature = 300.0;        ///< K
  double width = 5e-3;               ///< l (m)
  double height = 1e-3;              ///< h (m)
  double thickness = 0.5e-3;         ///< t (m)
  double mass = 6e-6;                ///< kg
  std::optional<double> inertia;     ///< yaw I (kg m^2); defaults to m l^2 / 12
  double fiber_diameter = 1e-6;      ///< D (m)
  double omega_m = 2.0 * constants::pi * 10e-3;  ///< torsional rad/s
  double q_m = 2e4;
  double poisson = 0.15;
  double youngs_modulus = 70e9;      ///< Pa
  double waist = 100e-6;             ///< beam radius at the pendulum mirrors (m)
  double phi_sub = 1e-7;
  double phi_coat = 1e-4;
  double coating_thickness = 10e-6;  ///< d (m)
  double finesse = 2e4;
  double wavelength = 780e-9;        ///< lambda_L (m)
  double input_power = 0.4e-6;       ///< P_in (W)
  double leak_delta_alpha = 60.0 * constants::mdeg;  ///< rad
  double fiber_length = 0.05;        ///< xi (m)
  double swing_frequency = 2.0;      ///< Hz
  double roll_frequency = 2.0;       ///< Hz
  double swing_q = 1e6;
  double roll_q = 1e6;
  double cavity_length = 0.05;       ///< m
  double cavity_radius = 0.10;       ///< m

  double moment_of_inertia() const;
  /// Roll about the cavity axis: m (l^2 + h^2) / 12.
  double roll_inertia() const;
  /// omega_L = 2 pi c / lambda_L.
  double laser_angular_frequency() const;
  /// Throws DomainError if any physical quantity is non-positive (P_in and
  /// the leakage bend may be zero).
  void validate() const;
};

enum class ShotConvention { sql, paper };
enum class LeakMode { swing, roll };

std::optional<ShotConvention> parse_shot_convention(std::string_view name);
std::string_view to_string(ShotConvention c);

/// Structural damping: (omega_mode / Q) (omega_mode / omega).
double damping_rate(double omega, double omega_mode, double q);

/// |chi(omega)|^2 = 1 / (I^2 ((wm^2 - w^2)^2 + (w gamma_m(w))^2)).
double susceptibility_sq(double omega, const NoiseParams& p);

/// 4 kB T I gamma_m(omega), N^2 m^2 / Hz.
double psd_suspension_thermal(double omega, const NoiseParams& p);

/// 8 l^2 F^2 hbar omega_L P_in / (pi^2 c^2), N^2 m^2 / Hz.
double psd_qrpn(const NoiseParams& p);

/// sql: hbar^2 / S_qrpn (rad^2/Hz). paper: hbar / S_qrpn as printed.
/// Throws DomainError when P_in = 0.
double psd_shot(const NoiseParams& p, ShotConvention convention = ShotConvention::sql);

/// Substrate plus coating Brownian noise of the pendulum mirrors, rad^2/Hz.
double psd_mirror_brownian(double omega, const NoiseParams& p);

/// Closed-form slopes of the design cavity (l = width, bend = leak_delta_alpha).
SensitivityReport design_sensitivity(const NoiseParams& p);

/// Thermally driven swing or roll motion read out through the residual yaw
/// bend, expressed as yaw-equivalent angle PSD (rad^2/Hz).
double leakage_psd(LeakMode mode, double omega, const NoiseParams& p,
                   const SensitivityReport& sens);

struct NoiseSource {
  std::string name;
  std::vector<double> torque;     ///< N^2 m^2 / Hz
  std::vector<double> angle;      ///< rad^2 / Hz
  std::vector<double> frequency;  ///< Hz^2 / Hz (cavity frequency)
};

struct NoiseBudget {
  std::vector<double> freq_hz;
  std::vector<NoiseSource> sources;  ///< thermal, qrpn, shot, brownian, swing, roll
  NoiseSource total;
  std::vector<double> susceptibility_sq;
  NoiseParams params;
  ShotConvention convention = ShotConvention::sql;
  double yaw_slope_hz_per_rad = 0.0;

  const NoiseSource& source(std::string_view name) const;
};

/// Logarithmic grid, `count` points from f_min to f_max inclusive.
std::vector<double> log_grid(double f_min = 0.1, double f_max = 1000.0, int count = 400);

/// Throws DomainError unless the grid is strictly positive and ascending.
NoiseBudget total_budget(const NoiseParams& p, std::span<const double> freq_hz,
                         ShotConvention convention = ShotConvention::sql);

/// Parameters of the rms comparison: a fused-silica bar suspended in the
/// experimental cavity, thermal energy kB T / 2 per mode.
struct RmsParams {
  double temperature = 300.0;
  double width = 12e-3;
  double height = 0.5e-3;
  double thickness = 0.5e-3;
  double density = 2200.0;
  double fiber_length = 0.05;
  double swing_frequency = 2.0;
  double roll_frequency = 2.0;
  double yaw_frequency = 5e-3;

  double mass() const { return density * width * height * thickness; }
};

enum class RmsMode { yaw, swing, roll };

/// Equipartition rms coordinate converted to an rms cavity shift with the
/// yaw slope (yaw) or the transverse slope (swing; roll via the roll-mode
/// translation).
double rms_mode_shift(RmsMode mode, const RmsParams& p, const SensitivityReport& sens);

}  // namespace zigzag
