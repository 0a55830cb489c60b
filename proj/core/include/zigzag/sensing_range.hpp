#pragma once

namespace zigzag {

/// Overlap between the cavity mode and the mode walked off by a yaw change.
struct OverlapResult {
  double delta_theta_yaw = 0.0;   ///< rad
  double delta_alpha_tilt = 0.0;  ///< rad, delta_theta / g
  double coupling_efficiency = 0.0;  ///< |<psi2|psi1>|^2 by quadrature
  double closed_form = 0.0;          ///< exp(-(pi w0 delta_alpha / lambda)^2)
};

/// Tilt-only overlap of two fundamental Gaussians at the waist.
/// Throws DomainError for g <= 0, w0 <= 0 or lambda <= 0.
OverlapResult coupling_efficiency(double delta_theta, double g, double w0, double wavelength);

/// 2 g lambda / (pi w0). Throws DomainError for g < 0 or w0 <= 0.
double sensing_range(double g, double w0, double wavelength);

/// Yaw change at which the quadrature efficiency falls to 1/e, found by
/// bracketing.
double one_over_e_yaw(double g, double w0, double wavelength);

}  // namespace zigzag
