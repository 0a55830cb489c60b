#include "zigzag/sensitivity.hpp"

#include <cmath>
#include <functional>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/raytrace.hpp"

namespace zigzag {

namespace {
double optical_frequency(const CavityConfig& cfg) {
  return constants::speed_of_light / cfg.wavelength;
}
}  // namespace

Slope yaw_sensitivity(const CavityConfig& cfg, const ModeGeometry& mode) {
  return {optical_frequency(cfg) * mode.beam_separation / mode.zig_length,
          2.0 * mode.beam_separation / cfg.wavelength * cfg.finesse_zig};
}

Slope pitch_sensitivity(const CavityConfig& cfg) {
  const double g = stability_parameter(cfg);
  if (!(g > 0.0)) throw DomainError("pitch sensitivity diverges for g <= 0");
  return {optical_frequency(cfg) * (1.0 + g) / (4.0 * g),
          cfg.length / cfg.wavelength * (1.0 + g) / g * cfg.finesse_zig};
}

Slope transverse_sensitivity(const CavityConfig& cfg, double delta_alpha) {
  return {optical_frequency(cfg) * delta_alpha / (2.0 * cfg.length),
          2.0 * delta_alpha / cfg.wavelength * cfg.finesse_zig};
}

double translation_path_change(double v, double phi, double yaw, double pitch,
                               double delta_alpha, double delta_beta) {
  return v * std::sin(phi - yaw) * delta_alpha -
         v * pitch * std::cos(phi - yaw) * delta_beta;
}

double roll_path_change(double roll, double width, double pitch) {
  return roll * width * pitch;
}

double z_translation_path_change(double v, double delta_beta) { return v * delta_beta; }

double roll_mode_translation(double roll, double roll_inertia, double fiber_length,
                             double mass) {
  if (!(fiber_length > 0.0)) throw DomainError("fiber length must be positive");
  return -roll_inertia / (fiber_length * mass) * roll;
}

double end_point_ratio(double yaw_hz_per_rad, double width, double transverse_hz_per_m) {
  return yaw_hz_per_rad * (2.0 / width) / transverse_hz_per_m;
}

SensitivityReport closed_form_report(const CavityConfig& cfg, const ModeGeometry& mode,
                                     double delta_alpha, double pitch) {
  SensitivityReport r;
  r.method = SensitivityMethod::closed_form;
  const Slope yaw = yaw_sensitivity(cfg, mode);
  r.yaw_hz_per_rad = yaw.hz;
  r.yaw_S = yaw.S;
  if (stability_parameter(cfg) > 0.0) {
    const Slope p2 = pitch_sensitivity(cfg);
    r.pitch2_hz_per_rad2 = p2.hz;
    r.pitch2_S2 = p2.S;
  }
  const Slope tr = transverse_sensitivity(cfg, delta_alpha);
  r.transverse_hz_per_m = tr.hz;
  r.transverse_S = tr.S;
  r.roll_hz_per_rad = optical_frequency(cfg) / mode.zig_length *
                      roll_path_change(1.0, mode.beam_separation, pitch);
  return r;
}

SensitivityReport finite_difference_sensitivities(const CavityConfig& cfg,
                                                  const PendulumSpec& spec,
                                                  const PendulumPose& pose,
                                                  const FdOptions& options) {
  const RayPath base = solve_zigzag_path(cfg, spec, pose);
  const auto shift = [&](const PendulumPose& p) {
    const RayPath path = solve_zigzag_path(cfg, spec, p, base);
    return shift_from_lengths(cfg, base.roundtrip, path.roundtrip);
  };
  const auto along = [&](Dof dof, double h) { return shift(apply_offset(pose, dof, h)); };

  SensitivityReport r;
  r.method = SensitivityMethod::finite_difference;

  const auto first = [&](Dof dof, double h) {
    const auto central = [&](double step) {
      return (along(dof, step) - along(dof, -step)) / (2.0 * step);
    };
    const double coarse = central(h);
    const double fine = central(h / 2.0);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    FdEstimate e{"d/d" + std::string(to_string(dof)), extrapolated, h,
                 std::abs(extrapolated - fine)};
    r.estimates.push_back(e);
    return extrapolated;
  };

  const double ha = options.angle_step;
  const double ht = options.translation_step;
  r.yaw_hz_per_rad = first(Dof::yaw, ha);
  r.roll_hz_per_rad = first(Dof::roll, ha);
  first(Dof::pitch, ha);
  r.transverse_hz_per_m = first(Dof::transverse, ht);
  first(Dof::longitudinal, ht);
  first(Dof::x_axis, ht);
  first(Dof::z, ht);

  {
    const double hc = options.curvature_step;
    // The shift at the base pose is zero by construction.
    const auto second = [&](double step) {
      return (along(Dof::pitch, step) + along(Dof::pitch, -step)) / (step * step);
    };
    const double coarse = second(hc);
    const double fine = second(hc / 2.0);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    r.pitch2_hz_per_rad2 = extrapolated / 2.0;
    r.estimates.push_back({"pitch curvature (shift per rad^2)", r.pitch2_hz_per_rad2, hc,
                           std::abs(extrapolated - fine) / 2.0});
  }

  const auto mixed = [&](Dof a, double ha_step, Dof b, double hb_step) {
    const auto at = [&](double da, double db) {
      return shift(apply_offset(apply_offset(pose, a, da), b, db));
    };
    const double value = (at(ha_step, hb_step) - at(ha_step, -hb_step) -
                          at(-ha_step, hb_step) + at(-ha_step, -hb_step)) /
                         (4.0 * ha_step * hb_step);
    const double half = (at(ha_step / 2, hb_step / 2) - at(ha_step / 2, -hb_step / 2) -
                         at(-ha_step / 2, hb_step / 2) + at(-ha_step / 2, -hb_step / 2)) /
                        (ha_step * hb_step);
    const double extrapolated = (4.0 * half - value) / 3.0;
    r.estimates.push_back({"d2/d" + std::string(to_string(a)) + " d" + std::string(to_string(b)),
                           extrapolated, ha_step, std::abs(extrapolated - half)});
  };
  mixed(Dof::yaw, options.mixed_angle_step, Dof::transverse, options.mixed_translation_step);
  mixed(Dof::yaw, options.mixed_angle_step, Dof::pitch, options.mixed_angle_step);
  mixed(Dof::pitch, options.mixed_angle_step, Dof::roll, options.mixed_angle_step);
  mixed(Dof::pitch, options.mixed_angle_step, Dof::z, options.mixed_translation_step);

  // Normalize by the traced zigzag linewidth, c / (2 s F_zig).
  const double linewidth =
      constants::speed_of_light / (2.0 * base.roundtrip) / cfg.finesse_zig;
  r.yaw_S = std::abs(r.yaw_hz_per_rad) / linewidth;
  r.pitch2_S2 = std::abs(r.pitch2_hz_per_rad2) / linewidth;
  r.transverse_S = std::abs(r.transverse_hz_per_m) / linewidth;
  return r;
}

}  // namespace zigzag
