#pragma once

#include <cmath>
#include <utility>

namespace zigzag {

// Cavity frame: origin at the cavity center, x along the line joining the
// two spherical-mirror centers, z vertical. All angles are radians.

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

/// Rodrigues rotation of `v` by `angle` about the unit axis `axis`.
Vec3 rotate(const Vec3& v, const Vec3& axis, double angle);

/// Two-mirror cavity with identical spherical mirrors.
struct CavityConfig {
  double length = 0.0;     ///< mirror separation L (m)
  double radius = 0.0;     ///< mirror radius of curvature R (m)
  double wavelength = 0.0; ///< optical wavelength (m)
  double finesse_on = 0.0;
  double finesse_zig = 0.0;
  Vec3 origin;             ///< cavity center in the working frame (m)

  /// Throws DomainError unless L, R, wavelength > 0 and both finesses > 1.
  void validate() const;
};

/// g = 1 - L/R.
double stability_parameter(const CavityConfig& cfg);

/// Rigid pendulum carrying a reflective face on each side. Face 1 faces the
/// +x mirror, face 2 the -x mirror; their mirror spots sit at the two ends of
/// the bar, a distance `width` apart.
struct PendulumSpec {
  double width = 0.0;      ///< l: mirror center-to-center separation (m)
  double height = 0.0;     ///< h (m)
  double thickness = 0.0;  ///< t: separation of the two reflecting faces (m)
  double mass = 0.0;       ///< m (kg)
  double delta_alpha = 0.0;  ///< relative yaw bend of the faces (rad)
  double delta_beta = 0.0;   ///< relative pitch bend of the faces (rad)
  double mirror_diameter = 0.0;  ///< aperture of each face mirror; 0 = unbounded
  double hole_diameter = 0.0;    ///< central through-hole; 0 = not checked

  static PendulumSpec from_density(double width, double height,
                                   double thickness, double density);

  /// Throws DomainError on non-positive width/height/mass, negative thickness
  /// or apertures, or bends outside the small-angle regime (|bend| < 0.1 rad).
  void validate() const;
};

struct PendulumPose {
  double yaw = 0.0;    ///< alpha, about z
  double pitch = 0.0;  ///< beta, about the bar's horizontal width axis
  double roll = 0.0;   ///< gamma, about the horizontal normal (cos a, sin a, 0)
  Vec3 translation;    ///< centroid displacement v (m)
};

/// Orthonormal triad n0 = {ca cb, sa cb, sb}, n_da = {-sa, ca, 0},
/// n_db = {-ca sb, -sa sb, cb}.
struct NormalBasis {
  Vec3 n0;
  Vec3 n_da;
  Vec3 n_db;
};

NormalBasis normal_basis(double yaw, double pitch);

/// Unit direction {cos a cos b, sin a cos b, sin b}.
Vec3 direction(double yaw, double pitch);

/// Face normals oriented along the direction of travel from the spherical
/// mirror towards the pendulum: n1 = -u(a - da/2, b - db/2),
/// n2 = +u(a + da/2, b + db/2), then rolled about the horizontal normal.
std::pair<Vec3, Vec3> pendulum_normals(const PendulumSpec& spec,
                                       const PendulumPose& pose);

/// Everything the ray tracer needs to know about a posed pendulum.
struct PendulumFrame {
  Vec3 centroid;
  Vec3 normal1;        ///< unit, points from mirror 1 into face 1
  Vec3 normal2;
  Vec3 spot1;          ///< mirror center on face 1 (a point of its plane)
  Vec3 spot2;
  Vec3 width_axis;     ///< unit, along the bar from spot1 towards spot2
  Vec3 central_normal; ///< n0 after roll
};

PendulumFrame pendulum_frame(const PendulumSpec& spec, const PendulumPose& pose);

}  // namespace zigzag
