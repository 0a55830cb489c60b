#include "zigzag/geometry.hpp"

#include <string>

#include "zigzag/errors.hpp"

namespace zigzag {

Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

void CavityConfig::validate() const {
  if (!(length > 0.0)) throw DomainError("cavity length must be positive");
  if (!(radius > 0.0)) throw DomainError("mirror radius of curvature must be positive");
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
  if (!(finesse_on > 1.0) || !(finesse_zig > 1.0)) {
    throw DomainError("finesse must exceed 1");
  }
}

double stability_parameter(const CavityConfig& cfg) {
  return 1.0 - cfg.length / cfg.radius;
}

PendulumSpec PendulumSpec::from_density(double width, double height,
                                        double thickness, double density) {
  if (!(density > 0.0)) throw DomainError("density must be positive");
  PendulumSpec spec;
  spec.width = width;
  spec.height = height;
  spec.thickness = thickness;
  spec.mass = density * width * height * thickness;
  return spec;
}

void PendulumSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw DomainError("pendulum width and height must be positive");
  }
  if (!(thickness >= 0.0)) throw DomainError("pendulum thickness must be non-negative");
  if (!(mass > 0.0)) throw DomainError("pendulum mass must be positive");
  if (!(mirror_diameter >= 0.0) || !(hole_diameter >= 0.0)) {
    throw DomainError("aperture diameters must be non-negative");
  }
  constexpr double small_angle_limit = 0.1;
  if (!(std::abs(delta_alpha) < small_angle_limit) ||
      !(std::abs(delta_beta) < small_angle_limit)) {
    throw DomainError("face bends must satisfy |bend| < 0.1 rad");
  }
}

Vec3 direction(double yaw, double pitch) {
  const double cb = std::cos(pitch);
  return {std::cos(yaw) * cb, std::sin(yaw) * cb, std::sin(pitch)};
}

NormalBasis normal_basis(double yaw, double pitch) {
  const double ca = std::cos(yaw), sa = std::sin(yaw);
  const double cb = std::cos(pitch), sb = std::sin(pitch);
  return {{ca * cb, sa * cb, sb}, {-sa, ca, 0.0}, {-ca * sb, -sa * sb, cb}};
}

PendulumFrame pendulum_frame(const PendulumSpec& spec, const PendulumPose& pose) {
  const double a = pose.yaw;
  const double b = pose.pitch;
  const double da = spec.delta_alpha / 2.0;
  const double db = spec.delta_beta / 2.0;
  const NormalBasis basis = normal_basis(a, b);

  // Roll axis is the horizontal projection of the central normal.
  const Vec3 roll_axis{std::cos(a), std::sin(a), 0.0};
  const auto roll = [&](const Vec3& v) { return rotate(v, roll_axis, pose.roll); };

  const Vec3 half_t = basis.n0 * (spec.thickness / 2.0);
  const Vec3 half_w = basis.n_da * (spec.width / 2.0);

  PendulumFrame frame;
  frame.centroid = pose.translation;
  frame.normal1 = roll(-direction(a - da, b - db));
  frame.normal2 = roll(direction(a + da, b + db));
  frame.spot1 = frame.centroid + roll(half_t - half_w);
  frame.spot2 = frame.centroid + roll(-half_t + half_w);
  frame.width_axis = roll(basis.n_da);
  frame.central_normal = roll(basis.n0);
  return frame;
}

std::pair<Vec3, Vec3> pendulum_normals(const PendulumSpec& spec,
                                       const PendulumPose& pose) {
  const PendulumFrame frame = pendulum_frame(spec, pose);
  return {frame.normal1, frame.normal2};
}

}  // namespace zigzag
