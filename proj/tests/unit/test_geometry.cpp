#include <gtest/gtest.h>

#include <random>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/geometry.hpp"

using namespace zigzag;
using constants::deg;

namespace {

CavityConfig cavity(double length, double radius) {
  return {length, radius, 780e-9, 880.0, 230.0, {}};
}

PendulumSpec bar(double da = 0.0, double db = 0.0) {
  return {11e-3, 1e-3, 0.5e-3, 6e-6, da, db};
}

}  // namespace

TEST(StabilityParameter, PaperCavity) {
  EXPECT_NEAR(stability_parameter(cavity(24.8e-3, 50e-3)), 0.504, 1e-12);
}

TEST(StabilityParameter, Limits) {
  EXPECT_DOUBLE_EQ(stability_parameter(cavity(50e-3, 50e-3)), 0.0);
  EXPECT_NEAR(stability_parameter(cavity(1e-12, 50e-3)), 1.0, 1e-10);
}

TEST(CavityConfig, RejectsInvalid) {
  EXPECT_THROW(cavity(0.0, 50e-3).validate(), DomainError);
  EXPECT_THROW(cavity(24.8e-3, -1.0).validate(), DomainError);
  CavityConfig c = cavity(24.8e-3, 50e-3);
  c.finesse_zig = 1.0;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_NO_THROW(cavity(24.8e-3, 50e-3).validate());
}

TEST(PendulumSpec, RejectsLargeBendsAndBadSizes) {
  EXPECT_THROW(bar(0.1).validate(), DomainError);
  EXPECT_THROW(bar(0.0, -0.2).validate(), DomainError);
  PendulumSpec s = bar();
  s.mass = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = bar();
  s.thickness = -1e-3;
  EXPECT_THROW(s.validate(), DomainError);
  EXPECT_NO_THROW(bar(0.05, 0.05).validate());
}

TEST(PendulumSpec, MassFromDensity) {
  const PendulumSpec s = PendulumSpec::from_density(12e-3, 0.5e-3, 0.5e-3, 2200.0);
  EXPECT_NEAR(s.mass, 6.6e-6, 1e-12);
}

TEST(Rotate, QuarterTurnAboutZ) {
  const Vec3 r = rotate({1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, constants::pi / 2);
  EXPECT_NEAR(r.x, 0.0, 1e-15);
  EXPECT_NEAR(r.y, 1.0, 1e-15);
  EXPECT_NEAR(r.z, 0.0, 1e-15);
}

TEST(PendulumNormals, AxisAlignedIdentity) {
  const auto [n1, n2] = pendulum_normals(bar(), PendulumPose{});
  EXPECT_NEAR(n1.x, -1.0, 1e-15);
  EXPECT_NEAR(n2.x, 1.0, 1e-15);
  EXPECT_NEAR(norm(n1 - Vec3{-1, 0, 0}), 0.0, 1e-15);
  EXPECT_NEAR(norm(n2 - Vec3{1, 0, 0}), 0.0, 1e-15);
}

TEST(PendulumNormals, PureYaw) {
  PendulumPose pose;
  pose.yaw = 8.5 * deg;
  const auto [n1, n2] = pendulum_normals(bar(), pose);
  EXPECT_NEAR(n1.x, -std::cos(8.5 * deg), 1e-15);
  EXPECT_NEAR(n1.y, -std::sin(8.5 * deg), 1e-15);
  EXPECT_NEAR(n1.z, 0.0, 1e-15);
  EXPECT_NEAR(norm(n1 + n2), 0.0, 1e-15);
}

TEST(PendulumNormals, YawBendTiltsBothNormalsTowardPlusY) {
  const double da = 0.2 * deg;
  const auto [n1, n2] = pendulum_normals(bar(da), PendulumPose{});
  EXPECT_NEAR(n1.y, 1.745e-3, 1e-6);
  EXPECT_NEAR(n2.y, 1.745e-3, 1e-6);
  EXPECT_NEAR(n1.y, std::sin(da / 2), 1e-15);
}

// First-order expansion n_{1,2} = -/+ n0 + cos(b) (da/2) n_da + (db/2) n_db,
// built here from explicit trig rather than normal_basis.
TEST(PendulumNormals, MatchFirstOrderExpansion) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double a = 0.3 * u(rng);
    const double b = 0.2 * u(rng);
    const double da = 1e-4 * u(rng);
    const double db = 1e-4 * u(rng);
    PendulumPose pose;
    pose.yaw = a;
    pose.pitch = b;
    const auto [n1, n2] = pendulum_normals(bar(da, db), pose);
    const Vec3 n0{std::cos(a) * std::cos(b), std::sin(a) * std::cos(b), std::sin(b)};
    const Vec3 nda{-std::sin(a), std::cos(a), 0.0};
    const Vec3 ndb{-std::cos(a) * std::sin(b), -std::sin(a) * std::sin(b), std::cos(b)};
    const Vec3 corr = std::cos(b) * (da / 2) * nda + (db / 2) * ndb;
    EXPECT_LT(norm(n1 - (-1.0 * n0 + corr)), 1e-8);
    EXPECT_LT(norm(n2 - (n0 + corr)), 1e-8);
    EXPECT_NEAR(norm(n1), 1.0, 1e-14);
    EXPECT_NEAR(norm(n2), 1.0, 1e-14);
  }
}

TEST(PendulumNormals, FlippingBendSignSwapsCorrections) {
  PendulumPose pose;
  pose.yaw = 0.1;
  pose.pitch = 0.05;
  const auto [a1, a2] = pendulum_normals(bar(1e-3, 2e-3), pose);
  const auto [b1, b2] = pendulum_normals(bar(-1e-3, -2e-3), pose);
  const auto [c1, c2] = pendulum_normals(bar(), pose);
  // First-order corrections of n1 and n2 are equal, so flipping the bends
  // negates both.
  EXPECT_LT(norm((a1 - c1) + (b1 - c1)), 1e-5);
  EXPECT_LT(norm((a2 - c2) + (b2 - c2)), 1e-5);
}

TEST(NormalBasis, OrthonormalTriad) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int k = 0; k < 500; ++k) {
    const NormalBasis nb = normal_basis(u(rng), u(rng));
    EXPECT_LT(std::abs(dot(nb.n0, nb.n_da)), 1e-12);
    EXPECT_LT(std::abs(dot(nb.n0, nb.n_db)), 1e-12);
    EXPECT_LT(std::abs(dot(nb.n_da, nb.n_db)), 1e-12);
    EXPECT_NEAR(norm(nb.n0), 1.0, 1e-12);
    EXPECT_NEAR(norm(nb.n_da), 1.0, 1e-12);
    EXPECT_NEAR(norm(nb.n_db), 1.0, 1e-12);
  }
}

TEST(PendulumNormals, ContinuousInPose) {
  PendulumPose p;
  p.yaw = 0.15;
  PendulumPose q = p;
  q.yaw += 1e-9;
  q.pitch += 1e-9;
  q.roll += 1e-9;
  const auto [a1, a2] = pendulum_normals(bar(1e-3, 1e-3), p);
  const auto [b1, b2] = pendulum_normals(bar(1e-3, 1e-3), q);
  EXPECT_LT(norm(a1 - b1), 1e-8);
  EXPECT_LT(norm(a2 - b2), 1e-8);
}

TEST(PendulumFrame, SpotsSitOnTheFacesAtWidthSeparation) {
  PendulumPose pose;
  pose.yaw = 8.5 * deg;
  pose.translation = {1e-4, -2e-4, 3e-5};
  const PendulumSpec s = bar();
  const PendulumFrame f = pendulum_frame(s, pose);
  const Vec3 d = f.spot2 - f.spot1;
  EXPECT_NEAR(dot(d, f.central_normal), -s.thickness, 1e-15);
  EXPECT_NEAR(norm(d - dot(d, f.central_normal) * f.central_normal), s.width, 1e-15);
  EXPECT_NEAR(norm(0.5 * (f.spot1 + f.spot2) - f.centroid), 0.0, 1e-15);
  EXPECT_NEAR(norm(f.centroid - pose.translation), 0.0, 1e-18);
}

TEST(PendulumFrame, RollMovesSpotsVerticallyInOppositeDirections) {
  PendulumPose pose;
  pose.yaw = 8.5 * deg;
  const PendulumFrame a = pendulum_frame(bar(), pose);
  pose.roll = 1e-4;
  const PendulumFrame b = pendulum_frame(bar(), pose);
  const double dz1 = b.spot1.z - a.spot1.z;
  const double dz2 = b.spot2.z - a.spot2.z;
  EXPECT_NEAR(dz1, -dz2, 1e-15);
  EXPECT_NEAR(std::abs(dz1), 1e-4 * 11e-3 / 2, 1e-12);
}
