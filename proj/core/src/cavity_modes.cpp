#include "zigzag/cavity_modes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

void require_zigzag_domain(double g, double radius) {
  if (!(radius > 0.0)) throw DomainError("radius of curvature must be positive");
  if (!(g > 0.5) || !(g < 1.0)) {
    throw DomainError("no-pendulum zigzag configuration only exists if g > 1/2 (and g < 1)");
  }
}

}  // namespace

NoPendulumZigzag no_pendulum_zigzag(double g, double radius) {
  require_zigzag_domain(g, radius);
  NoPendulumZigzag out;
  out.tan_delta = std::sqrt((2.0 * g + 5.0) * (2.0 * g - 1.0)) / (2.0 * g * g + 4.0 * g - 1.0);
  out.delta = std::atan(out.tan_delta);
  // The outer legs pass through the two centers of curvature, 2R - L = R(1+g) apart.
  out.beam_separation = radius * std::sin(out.delta) * (1.0 + g);
  return out;
}

double beam_separation_closed_form(double g, double radius) {
  require_zigzag_domain(g, radius);
  return radius * std::sqrt(1.0 - 0.25 / (g * g + 2.0 * g - 1.0));
}

double required_cavity_length(double l_target, double radius) {
  if (!(radius > 0.0)) throw DomainError("radius of curvature must be positive");
  const double ratio = l_target / radius;
  if (!(ratio > 0.0) || !(ratio * ratio < 7.0 / 8.0)) {
    throw DomainError("target beam separation must lie in (0, R sqrt(7/8))");
  }
  // g^2 + 2g - 1 = 1 / (4 (1 - (l/R)^2)), g > 1/2 branch.
  const double x = 0.25 / (1.0 - ratio * ratio);
  const double g = std::sqrt(2.0 + x) - 1.0;
  return radius * (1.0 - g);
}

double beam_waist(const CavityConfig& cfg) {
  const double g = stability_parameter(cfg);
  if (!(g >= 0.0) || !(g < 1.0)) throw DomainError("beam waist requires 0 <= g < 1");
  return std::sqrt(cfg.wavelength * cfg.length / (2.0 * constants::pi)) *
         std::pow((1.0 + g) / (1.0 - g), 0.25);
}

double zigzag_mode_length(double length, double beam_separation, double g) {
  return 2.0 * length -
         beam_separation * beam_separation / (2.0 * length) * g / (1.0 + g);
}

ModeFrequencies mode_frequencies(const CavityConfig& cfg, double beam_separation) {
  const double g = stability_parameter(cfg);
  const double l_zig = zigzag_mode_length(cfg.length, beam_separation, g);
  ModeFrequencies f;
  f.fsr_on = constants::speed_of_light / (2.0 * cfg.length);
  f.fsr_zig = constants::speed_of_light / (2.0 * l_zig);
  f.linewidth_on = f.fsr_on / cfg.finesse_on;
  f.linewidth_zig = f.fsr_zig / cfg.finesse_zig;
  return f;
}

double transverse_mode_spacing(const CavityConfig& cfg, int order_a, int order_b) {
  const double g = stability_parameter(cfg);
  if (!(g >= -1.0) || !(g <= 1.0)) throw DomainError("transverse spacing requires |g| <= 1");
  const double fsr = constants::speed_of_light / (2.0 * cfg.length);
  const double orders = std::abs(static_cast<double>(order_b - order_a));
  const double offset = orders * std::acos(g) / constants::pi;  // in FSR units
  const double folded = offset - std::floor(offset);
  return fsr * std::min(folded, 1.0 - folded);
}

ModeGeometry mode_geometry(const CavityConfig& cfg) {
  const double g = stability_parameter(cfg);
  const NoPendulumZigzag zz = no_pendulum_zigzag(g, cfg.radius);
  ModeGeometry mg = mode_geometry(cfg, zz.beam_separation, zz.delta);
  mg.delta_angle = zz.delta;
  return mg;
}

ModeGeometry mode_geometry(const CavityConfig& cfg, double beam_separation,
                           double operating_yaw) {
  const double g = stability_parameter(cfg);
  if (!(beam_separation >= 0.0) || !(beam_separation < cfg.radius)) {
    throw DomainError("beam separation must lie in [0, R)");
  }
  ModeGeometry mg;
  mg.beam_separation = beam_separation;
  mg.zig_length = zigzag_mode_length(cfg.length, beam_separation, g);
  mg.waist = beam_waist(cfg);
  mg.delta_angle = operating_yaw;
  mg.operating_yaw = operating_yaw;
  return mg;
}

}  // namespace zigzag
