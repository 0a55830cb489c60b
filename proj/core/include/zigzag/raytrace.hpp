#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/geometry.hpp"

namespace zigzag {

/// Resonance shifts are computed from the geometric path length only; the
/// Gouy-phase contribution is not modeled.
inline constexpr std::string_view gouy_phase_note =
    "Gouy-phase contribution excluded; shifts are purely geometric";

/// Solved zigzag path P1-M1-M2-P2. M1 lies on the +x mirror, M2 on the -x
/// mirror; P1, P2 are the normal-incidence points on the pendulum faces.
struct RayPath {
  Vec3 m1, m2, p1, p2;
  Vec3 normal1, normal2;  ///< face normals the path was solved for
  double roundtrip = 0.0; ///< s = |P1M1| + |M1M2| + |M2P2| (m)
  double residual = 0.0;  ///< final residual norm of the closure equations (m)
  int iterations = 0;
  bool grid_seeded = false;  ///< seed came from a grid search (always true for g <= 1/2)
  bool degenerate = false;   ///< g == 0 (confocal); solved but flagged

  /// Perpendicular distance between the two outer legs.
  double beam_separation() const;
};

struct SolverOptions {
  double tolerance = 1e-12;  ///< accepted residual norm (m)
  int max_iterations = 50;
};

/// Centers of curvature of the +x (index 1) and -x (index 2) mirrors.
Vec3 mirror_center(const CavityConfig& cfg, int index);

/// Solves the closure conditions
///   (M2-M1)/|M2-M1| + n1 = mu1 (O1-M1)/R,   (M1-M2)/|M1-M2| + n2 = mu2 (O2-M2)/R,
///   |Mi - Oi| = R,
/// for (M1, M2, mu1, mu2) by damped Newton, then intersects the legs with the
/// face planes. Throws NoConvergence or NoSolution.
RayPath solve_zigzag_path(const CavityConfig& cfg, const PendulumSpec& spec,
                          const PendulumPose& pose,
                          const std::optional<RayPath>& guess = std::nullopt,
                          const SolverOptions& options = {});

/// (c/lambda) (s - s_ref) / s_ref.
double shift_from_lengths(const CavityConfig& cfg, double s_ref, double s);

double frequency_shift(const CavityConfig& cfg, const PendulumSpec& spec,
                       const PendulumPose& pose_ref, const PendulumPose& pose);

enum class Dof { yaw, pitch, roll, transverse, longitudinal, x_axis, z };

std::optional<Dof> parse_dof(std::string_view name);
std::string_view to_string(Dof dof);
bool is_angular(Dof dof);

/// Displaces `pose` along one degree of freedom. Translations are taken
/// relative to the pose's yaw: transverse is (-sin a, cos a, 0), longitudinal
/// (cos a, sin a, 0).
PendulumPose apply_offset(const PendulumPose& pose, Dof dof, double offset);

struct SweepPoint {
  double offset = 0.0;    ///< rad or m
  double shift_hz = 0.0;
  double roundtrip = 0.0; ///< m
};

struct SweepResult {
  Dof dof = Dof::yaw;
  RayPath reference;
  std::vector<SweepPoint> points;
  std::optional<double> range_exceeded_at;  ///< first offset that failed
  std::string stop_reason;
};

/// Continuation sweep: each grid point is seeded with the previous solution.
/// Stops at the first unsolvable offset and records it.
SweepResult sweep(const CavityConfig& cfg, const PendulumSpec& spec,
                  const PendulumPose& pose_ref, Dof dof,
                  std::span<const double> grid);

}  // namespace zigzag
