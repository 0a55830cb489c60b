#pragma once

#include "zigzag/geometry.hpp"

namespace zigzag {

/// Zigzag geometry of the empty cavity: a self-replicating path whose two
/// outer legs are parallel, at angle delta to the cavity axis, and hit both
/// spherical mirrors at normal incidence. Exists only for 1/2 < g < 1.
struct NoPendulumZigzag {
  double tan_delta = 0.0;
  double delta = 0.0;          ///< rad, > 0 by convention (legs tilted to +y)
  double beam_separation = 0.0;  ///< l (m)
};

/// Closed-form solution via tan(delta). Throws DomainError unless 1/2 < g < 1
/// and R > 0.
NoPendulumZigzag no_pendulum_zigzag(double g, double radius);

/// l = R sqrt(1 - 1/(4 (g^2 + 2g - 1))). Same domain as no_pendulum_zigzag.
double beam_separation_closed_form(double g, double radius);

/// Inverse of beam_separation_closed_form on the g > 1/2 branch.
/// Throws DomainError unless 0 < l_target < R sqrt(7/8).
double required_cavity_length(double l_target, double radius);

/// w0 = sqrt(lambda L / 2 pi) ((1+g)/(1-g))^(1/4); throws for g outside [0, 1).
double beam_waist(const CavityConfig& cfg);

/// L_zig = 2L - (l^2 / 2L) g/(1+g).
double zigzag_mode_length(double length, double beam_separation, double g);

struct ModeFrequencies {
  double fsr_on = 0.0;        ///< Hz
  double fsr_zig = 0.0;       ///< Hz
  double linewidth_on = 0.0;  ///< Hz, full width
  double linewidth_zig = 0.0; ///< Hz, full width
};

/// FSRs c/(2L), c/(2 L_zig) and linewidths FSR/finesse. `beam_separation` is
/// the zigzag l used for L_zig.
ModeFrequencies mode_frequencies(const CavityConfig& cfg, double beam_separation);

/// Distance from transverse order `order_a` to the nearest resonance of
/// transverse order `order_b`, folding the Gouy offset modulo one FSR.
double transverse_mode_spacing(const CavityConfig& cfg, int order_a, int order_b);

struct ModeGeometry {
  double beam_separation = 0.0;  ///< l (m)
  double zig_length = 0.0;       ///< L_zig (m)
  double waist = 0.0;            ///< w0 at the cavity center (m)
  double delta_angle = 0.0;      ///< no-pendulum leg angle (rad)
  double operating_yaw = 0.0;    ///< pendulum yaw that makes its faces normal to the legs
};

/// Mode geometry for a cavity operated at its no-pendulum zigzag (g > 1/2).
ModeGeometry mode_geometry(const CavityConfig& cfg);

/// Mode geometry for an explicit beam separation (any 0 <= g < 1).
ModeGeometry mode_geometry(const CavityConfig& cfg, double beam_separation,
                           double operating_yaw);

}  // namespace zigzag
