#include "zigzag/raytrace.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

using Vector8 = Eigen::Matrix<double, 8, 1>;
using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Matrix3 = Eigen::Matrix3d;

Eigen::Vector3d to_eigen(const Vec3& v) { return {v.x, v.y, v.z}; }
Vec3 from_eigen(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

// Unknowns: M1 (0..2), M2 (3..5), mu1 (6), mu2 (7). mu is the bisector
// multiplier scaled by R so all residual rows carry units of length.
struct ClosureSystem {
  Eigen::Vector3d o1, o2, n1, n2;
  double radius;

  Vector8 residual(const Vector8& x) const {
    const Eigen::Vector3d m1 = x.segment<3>(0);
    const Eigen::Vector3d m2 = x.segment<3>(3);
    const Eigen::Vector3d u = (m2 - m1).normalized();
    Vector8 f;
    f.segment<3>(0) = radius * (u + n1) - x(6) * (o1 - m1);
    f.segment<3>(3) = radius * (-u + n2) - x(7) * (o2 - m2);
    f(6) = ((m1 - o1).squaredNorm() - radius * radius) / (2.0 * radius);
    f(7) = ((m2 - o2).squaredNorm() - radius * radius) / (2.0 * radius);
    return f;
  }

  Matrix8 jacobian(const Vector8& x) const {
    const Eigen::Vector3d m1 = x.segment<3>(0);
    const Eigen::Vector3d m2 = x.segment<3>(3);
    const Eigen::Vector3d d = m2 - m1;
    const double len = d.norm();
    const Eigen::Vector3d u = d / len;
    const Matrix3 proj = (Matrix3::Identity() - u * u.transpose()) * (radius / len);

    Matrix8 j = Matrix8::Zero();
    j.block<3, 3>(0, 0) = -proj + x(6) * Matrix3::Identity();
    j.block<3, 3>(0, 3) = proj;
    j.block<3, 1>(0, 6) = -(o1 - m1);
    j.block<3, 3>(3, 0) = proj;
    j.block<3, 3>(3, 3) = -proj + x(7) * Matrix3::Identity();
    j.block<3, 1>(3, 7) = -(o2 - m2);
    j.block<1, 3>(6, 0) = (m1 - o1).transpose() / radius;
    j.block<1, 3>(7, 3) = (m2 - o2).transpose() / radius;
    return j;
  }
};

// Multipliers consistent with given mirror points.
void fill_multipliers(const ClosureSystem& sys, Vector8& x) {
  const Eigen::Vector3d m1 = x.segment<3>(0);
  const Eigen::Vector3d m2 = x.segment<3>(3);
  const Eigen::Vector3d u = (m2 - m1).normalized();
  x(6) = sys.radius * (u + sys.n1).dot(sys.o1 - m1) / (sys.o1 - m1).squaredNorm();
  x(7) = sys.radius * (-u + sys.n2).dot(sys.o2 - m2) / (sys.o2 - m2).squaredNorm();
}

// Seed from the planar, point-symmetric path for the mean face yaw: M1 at
// angle phi on the +x mirror, M2 = -M1, and the mirror normal at M1 bisecting
// the directions to the origin and to the face.
std::optional<Vector8> symmetric_seed(const CavityConfig& cfg, const ClosureSystem& sys) {
  const Eigen::Vector3d mean_normal = (sys.n2 - sys.n1).normalized();
  const double yaw = std::atan2(mean_normal.y(), mean_normal.x());
  const double r = cfg.radius;
  const double o1x = cfg.length / 2.0 - r;

  const auto residual = [&](double phi) {
    const double mx = o1x + r * std::cos(phi);
    const double my = r * std::sin(phi);
    return std::atan2(my, mx) + yaw - 2.0 * phi;
  };

  // M1 must lie on the cap facing the cavity interior (x > 0).
  const double cap_cos = -o1x / r;
  const double phi_max = cap_cos < 1.0 ? 0.999 * std::acos(std::max(cap_cos, -1.0)) : 0.0;
  if (!(phi_max > 0.0)) return std::nullopt;

  constexpr int grid_points = 2001;
  std::optional<double> best;
  double prev_phi = -phi_max;
  double prev_f = residual(prev_phi);
  for (int i = 1; i < grid_points; ++i) {
    const double phi = -phi_max + 2.0 * phi_max * i / (grid_points - 1);
    const double f = residual(phi);
    if (f == 0.0 || (prev_f < 0.0) != (f < 0.0)) {
      double root = phi;
      if (f != 0.0) {
        boost::uintmax_t max_iter = 200;
        const auto [lo, hi] = boost::math::tools::bisect(
            residual, prev_phi, phi, boost::math::tools::eps_tolerance<double>(52), max_iter);
        root = 0.5 * (lo + hi);
      }
      if (!best || std::abs(root) < std::abs(*best)) best = root;
    }
    prev_phi = phi;
    prev_f = f;
  }
  if (!best) return std::nullopt;

  const Eigen::Vector3d m1{o1x + r * std::cos(*best), r * std::sin(*best), 0.0};
  const Eigen::Vector3d origin = to_eigen(cfg.origin);
  Vector8 x;
  x.segment<3>(0) = origin + m1;
  x.segment<3>(3) = origin - m1;
  fill_multipliers(sys, x);
  return x;
}

struct NewtonOutcome {
  Vector8 x;
  double residual = 0.0;
  int iterations = 0;
};

NewtonOutcome damped_newton(const ClosureSystem& sys, Vector8 x, const SolverOptions& opt) {
  // Iterate below the acceptance tolerance; stop once progress stalls.
  const double target = opt.tolerance * 1e-3;
  Vector8 f = sys.residual(x);
  double r = f.norm();
  int it = 0;
  while (it < opt.max_iterations && r > target && std::isfinite(r)) {
    const Vector8 step = sys.jacobian(x).partialPivLu().solve(-f);
    if (!step.allFinite()) break;
    double damping = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 40; ++halvings) {
      const Vector8 trial = x + damping * step;
      const Vector8 f_trial = sys.residual(trial);
      const double r_trial = f_trial.norm();
      if (r_trial < r) {
        x = trial;
        f = f_trial;
        r = r_trial;
        improved = true;
        break;
      }
      damping *= 0.5;
    }
    ++it;
    if (!improved) break;
  }
  return {x, r, it};
}

}  // namespace

double RayPath::beam_separation() const {
  const Vec3 axis = normalized(normal2 - normal1);
  const Vec3 d = p2 - p1;
  return norm(d - axis * dot(d, axis));
}

Vec3 mirror_center(const CavityConfig& cfg, int index) {
  const double x = cfg.length / 2.0 - cfg.radius;
  return cfg.origin + (index == 1 ? Vec3{x, 0.0, 0.0} : Vec3{-x, 0.0, 0.0});
}

RayPath solve_zigzag_path(const CavityConfig& cfg, const PendulumSpec& spec,
                          const PendulumPose& pose, const std::optional<RayPath>& guess,
                          const SolverOptions& options) {
  cfg.validate();
  spec.validate();
  const double g = stability_parameter(cfg);
  if (!(g >= 0.0)) throw NoSolution("zigzag path requires g >= 0");

  const PendulumFrame frame = pendulum_frame(spec, pose);
  const Vec3 o1 = mirror_center(cfg, 1);
  const Vec3 o2 = mirror_center(cfg, 2);
  const ClosureSystem sys{to_eigen(o1), to_eigen(o2), to_eigen(frame.normal1),
                          to_eigen(frame.normal2), cfg.radius};

  RayPath path;
  path.degenerate = std::abs(g) < 1e-12;

  Vector8 x0;
  if (guess) {
    x0.segment<3>(0) = to_eigen(guess->m1);
    x0.segment<3>(3) = to_eigen(guess->m2);
    fill_multipliers(sys, x0);
    path.grid_seeded = guess->grid_seeded;
  } else {
    const auto seed = symmetric_seed(cfg, sys);
    if (!seed) throw NoSolution("no planar zigzag seed exists for this pose");
    x0 = *seed;
    path.grid_seeded = true;
  }

  const NewtonOutcome sol = damped_newton(sys, x0, options);
  if (!(sol.residual <= options.tolerance)) {
    throw NoConvergence("zigzag path solver stalled at residual " + std::to_string(sol.residual) +
                        " m after " + std::to_string(sol.iterations) + " iterations");
  }

  path.m1 = from_eigen(sol.x.segment<3>(0));
  path.m2 = from_eigen(sol.x.segment<3>(3));
  path.normal1 = frame.normal1;
  path.normal2 = frame.normal2;
  path.residual = sol.residual;
  path.iterations = sol.iterations;

  // Reject solutions on the far side of either sphere.
  if (!((path.m1 - o1).x > 0.0) || !((path.m2 - o2).x < 0.0) ||
      !((path.m1 - cfg.origin).x > 0.0) || !((path.m2 - cfg.origin).x < 0.0)) {
    throw NoSolution("solution does not lie on the physical mirror surfaces");
  }

  const double leg1 = dot(frame.spot1 - path.m1, frame.normal1);
  const double leg2 = dot(frame.spot2 - path.m2, frame.normal2);
  if (!(leg1 > 0.0) || !(leg2 > 0.0)) {
    throw NoSolution("pendulum face lies behind the spherical mirror");
  }
  path.p1 = path.m1 + frame.normal1 * leg1;
  path.p2 = path.m2 + frame.normal2 * leg2;
  path.roundtrip = leg1 + norm(path.m2 - path.m1) + leg2;

  if (spec.mirror_diameter > 0.0) {
    const double limit = spec.mirror_diameter / 2.0;
    if (norm(path.p1 - frame.spot1) > limit || norm(path.p2 - frame.spot2) > limit) {
      throw NoSolution("zigzag leg misses a pendulum face mirror");
    }
  }
  if (spec.hole_diameter > 0.0) {
    // The M1-M2 leg must cross the pendulum mid-plane inside the hole.
    const Vec3 d = path.m2 - path.m1;
    const double denom = dot(d, frame.central_normal);
    bool through_hole = false;
    if (std::abs(denom) > 0.0) {
      const double t = dot(frame.centroid - path.m1, frame.central_normal) / denom;
      const Vec3 q = path.m1 + d * t;
      through_hole = t > 0.0 && t < 1.0 && norm(q - frame.centroid) <= spec.hole_diameter / 2.0;
    }
    if (!through_hole) throw NoSolution("zigzag leg is blocked by the pendulum body");
  }
  return path;
}

double shift_from_lengths(const CavityConfig& cfg, double s_ref, double s) {
  return constants::speed_of_light / cfg.wavelength * (s - s_ref) / s_ref;
}

double frequency_shift(const CavityConfig& cfg, const PendulumSpec& spec,
                       const PendulumPose& pose_ref, const PendulumPose& pose) {
  const RayPath ref = solve_zigzag_path(cfg, spec, pose_ref);
  const RayPath moved = solve_zigzag_path(cfg, spec, pose, ref);
  return shift_from_lengths(cfg, ref.roundtrip, moved.roundtrip);
}

namespace {
constexpr std::array<std::pair<Dof, std::string_view>, 7> dof_names{{
    {Dof::yaw, "yaw"},
    {Dof::pitch, "pitch"},
    {Dof::roll, "roll"},
    {Dof::transverse, "transverse"},
    {Dof::longitudinal, "longitudinal"},
    {Dof::x_axis, "x-axis"},
    {Dof::z, "z"},
}};
}  // namespace

std::optional<Dof> parse_dof(std::string_view name) {
  for (const auto& [dof, text] : dof_names) {
    if (text == name) return dof;
  }
  return std::nullopt;
}

std::string_view to_string(Dof dof) {
  for (const auto& [d, text] : dof_names) {
    if (d == dof) return text;
  }
  return "unknown";
}

bool is_angular(Dof dof) {
  return dof == Dof::yaw || dof == Dof::pitch || dof == Dof::roll;
}

PendulumPose apply_offset(const PendulumPose& pose, Dof dof, double offset) {
  PendulumPose out = pose;
  const double ca = std::cos(pose.yaw);
  const double sa = std::sin(pose.yaw);
  switch (dof) {
    case Dof::yaw: out.yaw += offset; break;
    case Dof::pitch: out.pitch += offset; break;
    case Dof::roll: out.roll += offset; break;
    case Dof::transverse: out.translation += Vec3{-sa, ca, 0.0} * offset; break;
    case Dof::longitudinal: out.translation += Vec3{ca, sa, 0.0} * offset; break;
    case Dof::x_axis: out.translation += Vec3{1.0, 0.0, 0.0} * offset; break;
    case Dof::z: out.translation += Vec3{0.0, 0.0, 1.0} * offset; break;
  }
  return out;
}

SweepResult sweep(const CavityConfig& cfg, const PendulumSpec& spec,
                  const PendulumPose& pose_ref, Dof dof, std::span<const double> grid) {
  SweepResult result;
  result.dof = dof;
  result.reference = solve_zigzag_path(cfg, spec, pose_ref);
  RayPath previous = result.reference;
  for (const double offset : grid) {
    try {
      const RayPath path = solve_zigzag_path(cfg, spec, apply_offset(pose_ref, dof, offset), previous);
      result.points.push_back(
          {offset, shift_from_lengths(cfg, result.reference.roundtrip, path.roundtrip),
           path.roundtrip});
      previous = path;
    } catch (const NoSolution& e) {
      result.range_exceeded_at = offset;
      result.stop_reason = e.what();
      break;
    } catch (const NoConvergence& e) {
      result.range_exceeded_at = offset;
      result.stop_reason = e.what();
      break;
    }
  }
  return result;
}

}  // namespace zigzag
