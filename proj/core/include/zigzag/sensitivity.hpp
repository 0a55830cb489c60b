#pragma once

#include <string>
#include <vector>

#include "zigzag/cavity_modes.hpp"
#include "zigzag/geometry.hpp"

namespace zigzag {

/// A frequency slope paired with its linewidth-normalized sensitivity S.
struct Slope {
  double hz = 0.0;  ///< frequency shift per unit coordinate (Hz/rad, Hz/m, ...)
  double S = 0.0;   ///< shift per unit coordinate divided by the full linewidth
};

/// (c/lambda) l / L_zig and S = 2 l F_zig / lambda.
Slope yaw_sensitivity(const CavityConfig& cfg, const ModeGeometry& mode);

/// (c/lambda) (1+g)/(4g) per rad^2 and S2 = (L/lambda) ((1+g)/g) F_zig.
/// Throws DomainError for g <= 0.
Slope pitch_sensitivity(const CavityConfig& cfg);

/// (c/lambda) delta_alpha/(2L) per meter and S = 2 delta_alpha F_zig / lambda.
Slope transverse_sensitivity(const CavityConfig& cfg, double delta_alpha);

/// Path change for an in-plane translation of magnitude v at azimuth phi:
/// v sin(phi - a) da - v b cos(phi - a) db.
double translation_path_change(double v, double phi, double yaw, double pitch,
                               double delta_alpha, double delta_beta);

/// Roll leakage gamma * l * beta.
double roll_path_change(double roll, double width, double pitch);

/// Vertical translation: v * delta_beta.
double z_translation_path_change(double v, double delta_beta);

/// Transverse displacement that accompanies roll in the suspended roll
/// normal mode: -(I / (xi m)) gamma.
double roll_mode_translation(double roll, double roll_inertia, double fiber_length,
                             double mass);

/// Yaw slope expressed per pendulum end-point displacement, divided by the
/// transverse slope: (yaw_hz * 2 / l) / transverse_hz. Equals 2/delta_alpha
/// when both slopes share the same path length.
double end_point_ratio(double yaw_hz_per_rad, double width, double transverse_hz_per_m);

enum class SensitivityMethod { closed_form, finite_difference };

/// One finite-difference estimate with its step and Richardson error bound.
struct FdEstimate {
  std::string name;
  double value = 0.0;
  double step = 0.0;
  double error = 0.0;
};

struct SensitivityReport {
  SensitivityMethod method = SensitivityMethod::closed_form;
  double yaw_hz_per_rad = 0.0;
  double yaw_S = 0.0;
  double pitch2_hz_per_rad2 = 0.0;
  double pitch2_S2 = 0.0;
  double transverse_hz_per_m = 0.0;
  double transverse_S = 0.0;
  double roll_hz_per_rad = 0.0;
  /// Finite-difference only: every first derivative, pitch curvature and
  /// mixed second derivatives, with steps and error estimates.
  std::vector<FdEstimate> estimates;
};

/// Closed forms for a cavity at the given mode geometry and bend.
/// roll_hz_per_rad uses gamma l beta at central pitch `pitch`.
SensitivityReport closed_form_report(const CavityConfig& cfg, const ModeGeometry& mode,
                                     double delta_alpha, double pitch = 0.0);

struct FdOptions {
  double angle_step = 1e-8;         ///< rad
  double translation_step = 1e-9;   ///< m
  double curvature_step = 1e-4;     ///< rad, pitch second derivative
  double mixed_angle_step = 1e-6;   ///< rad
  double mixed_translation_step = 1e-7;  ///< m
};

/// Central differences of the ray-traced shift with one Richardson step.
/// Throws whatever the solver throws.
SensitivityReport finite_difference_sensitivities(const CavityConfig& cfg,
                                                  const PendulumSpec& spec,
                                                  const PendulumPose& pose,
                                                  const FdOptions& options = {});

}  // namespace zigzag
