#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zigzag/cavity_modes.hpp"
#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/raytrace.hpp"
#include "zigzag/sensitivity.hpp"

using namespace zigzag;
using constants::deg;
using constants::pi;
using constants::speed_of_light;

namespace {

CavityConfig paper_cavity() { return {24.8e-3, 50e-3, 780e-9, 880.0, 230.0, {}}; }

PendulumSpec bar(double t = 0.0, double da = 0.0, double db = 0.0) {
  return {11e-3, 1e-3, t, 6e-6, da, db};
}

PendulumPose at_yaw(double yaw) {
  PendulumPose p;
  p.yaw = yaw;
  return p;
}

double nu(const CavityConfig& c) { return speed_of_light / c.wavelength; }

}  // namespace

TEST(YawSensitivity, ClosedForm) {
  const CavityConfig c = paper_cavity();
  const ModeGeometry m = mode_geometry(c, 11e-3, 8.5 * deg);
  const Slope s = yaw_sensitivity(c, m);
  EXPECT_NEAR(s.hz, nu(c) * 11e-3 / m.zig_length, 1e-6);
  EXPECT_NEAR(s.S, 2 * 11e-3 * 230 / 780e-9, 1e-6);
  EXPECT_NEAR(s.S, 6.5e6, 0.02 * 6.5e6);
}

TEST(YawSensitivity, SIndependentOfCavityLength) {
  const double s0 = yaw_sensitivity(paper_cavity(), mode_geometry(paper_cavity(), 11e-3, 0)).S;
  for (double length : {5e-3, 15e-3, 30e-3, 45e-3}) {
    CavityConfig c = paper_cavity();
    c.length = length;
    EXPECT_DOUBLE_EQ(yaw_sensitivity(c, mode_geometry(c, 11e-3, 0)).S, s0);
  }
}

TEST(PitchSensitivity, ClosedFormAndDomain) {
  const CavityConfig c = paper_cavity();
  const double g = 0.504;
  const Slope s = pitch_sensitivity(c);
  EXPECT_NEAR(s.hz, nu(c) * (1 + g) / (4 * g), 1e-3 * s.hz);
  EXPECT_NEAR(s.S, c.length / c.wavelength * (1 + g) / g * 230, 1e-6 * s.S);
  CavityConfig confocal = c;
  confocal.length = c.radius;
  EXPECT_THROW(pitch_sensitivity(confocal), DomainError);
}

TEST(TransverseSensitivity, PaperBend) {
  const CavityConfig c = paper_cavity();
  const Slope s = transverse_sensitivity(c, 0.2 * deg);
  EXPECT_DOUBLE_EQ(s.hz, nu(c) * 0.2 * deg / (2 * c.length));
  // 27 MHz/um modeled vs 30 MHz/um observed.
  EXPECT_NEAR(s.hz * 1e-6 / 1e6, 27.1, 0.1);
  EXPECT_NEAR(s.S, 2 * 0.2 * deg / c.wavelength * 230, 1e-6 * s.S);
}

TEST(TranslationPathChange, LinearPeriodicZeroMean) {
  const double a = 0.15, b = 1e-3, da = 3e-3, db = -2e-3;
  const double v = 1e-6;
  for (double phi : {0.0, 0.3, 1.7, -2.2}) {
    const double d1 = translation_path_change(v, phi, a, b, da, db);
    EXPECT_NEAR(translation_path_change(3 * v, phi, a, b, da, db), 3 * d1, 1e-12 * std::abs(d1));
    EXPECT_NEAR(translation_path_change(v, phi + 2 * pi, a, b, da, db), d1, 1e-12 * std::abs(d1));
  }
  double sum = 0.0;
  const int n = 360;
  for (int i = 0; i < n; ++i) sum += translation_path_change(v, 2 * pi * i / n, a, b, da, db);
  EXPECT_NEAR(sum / n, 0.0, 1e-22);
}

TEST(TranslationPathChange, LongitudinalVanishes) {
  EXPECT_NEAR(translation_path_change(1e-6, 0.15, 0.15, 0.0, 3e-3, 0.0), 0.0, 1e-24);
}

TEST(RollPathChange, OddInRollAndPitch) {
  const double r = roll_path_change(1e-3, 11e-3, 2e-3);
  EXPECT_DOUBLE_EQ(roll_path_change(-1e-3, 11e-3, 2e-3), -r);
  EXPECT_DOUBLE_EQ(roll_path_change(1e-3, 11e-3, -2e-3), -r);
  EXPECT_DOUBLE_EQ(r, 1e-3 * 11e-3 * 2e-3);
}

TEST(RollModeTranslation, Sign) {
  EXPECT_DOUBLE_EQ(roll_mode_translation(1e-3, 2e-10, 0.05, 6e-6), -2e-10 / (0.05 * 6e-6) * 1e-3);
  EXPECT_THROW(roll_mode_translation(1e-3, 2e-10, 0.0, 6e-6), DomainError);
}

TEST(EndPointRatio, TwoOverBend) {
  const CavityConfig c = paper_cavity();
  const double da = 0.2 * deg;
  // Same path length for both slopes.
  const double yaw = nu(c) * 11e-3 / (2 * c.length);
  const double ratio = end_point_ratio(yaw, 11e-3, transverse_sensitivity(c, da).hz);
  EXPECT_NEAR(ratio, 2 / da, 1e-9 * ratio);
  EXPECT_NEAR(ratio, 573, 1);
}

TEST(FiniteDifference, YawMatchesClosedFormWithTracedSeparation) {
  const CavityConfig c = paper_cavity();
  const PendulumPose p = at_yaw(8.5 * deg);
  const SensitivityReport fd = finite_difference_sensitivities(c, bar(), p);
  const RayPath path = solve_zigzag_path(c, bar(), p);
  const ModeGeometry m = mode_geometry(c, path.beam_separation(), p.yaw);
  const double closed = yaw_sensitivity(c, m).hz;
  EXPECT_NEAR(std::abs(fd.yaw_hz_per_rad), closed, 1e-3 * closed);
  // The exact form uses the traced length: (c/lambda) l / s.
  EXPECT_NEAR(std::abs(fd.yaw_hz_per_rad), nu(c) * path.beam_separation() / path.roundtrip,
              1e-6 * closed);
}

TEST(FiniteDifference, PitchCurvatureSmallYawLimit) {
  const CavityConfig c = paper_cavity();
  const SensitivityReport fd = finite_difference_sensitivities(c, bar(), at_yaw(0.2 * deg));
  const double closed = pitch_sensitivity(c).hz;
  EXPECT_NEAR(std::abs(fd.pitch2_hz_per_rad2), closed, 1e-4 * closed);
}

TEST(FiniteDifference, PitchCurvatureAtDesignPose) {
  const CavityConfig c = paper_cavity();
  const SensitivityReport fd = finite_difference_sensitivities(c, bar(), at_yaw(8.5 * deg));
  const double closed = pitch_sensitivity(c).hz;
  EXPECT_NEAR(std::abs(fd.pitch2_hz_per_rad2), closed, 0.03 * closed);
}

TEST(FiniteDifference, TransverseSlopeWithBend) {
  const CavityConfig c = paper_cavity();
  const double da = 0.2 * deg;
  const PendulumPose p = at_yaw(8.5 * deg);
  const SensitivityReport fd = finite_difference_sensitivities(c, bar(0.0, da), p);
  const double s = solve_zigzag_path(c, bar(0.0, da), p).roundtrip;
  // delta s = v delta_alpha for a transverse move, divided by the traced length.
  EXPECT_NEAR(std::abs(fd.transverse_hz_per_m), nu(c) * da / s, 1e-3 * nu(c) * da / s);
  // The closed form divides by 2L instead of s.
  const double closed = transverse_sensitivity(c, da).hz;
  EXPECT_NEAR(std::abs(fd.transverse_hz_per_m), closed, 0.02 * closed);
}

TEST(FiniteDifference, ZeroDerivativesAtSymmetricPose) {
  const CavityConfig c = paper_cavity();
  const SensitivityReport fd = finite_difference_sensitivities(c, bar(), at_yaw(8.5 * deg));
  // Without bends translations and roll leave s unchanged to first order.
  EXPECT_LT(std::abs(fd.transverse_hz_per_m) * 1e-6, 1e3);
  EXPECT_LT(std::abs(fd.roll_hz_per_rad) * 1e-6, 1e3);
  EXPECT_FALSE(fd.estimates.empty());
  for (const auto& e : fd.estimates) {
    EXPECT_GT(e.step, 0.0) << e.name;
    EXPECT_GE(e.error, 0.0) << e.name;
  }
}

TEST(FiniteDifference, ReportsCrossTerms) {
  const SensitivityReport fd =
      finite_difference_sensitivities(paper_cavity(), bar(0.0, 0.2 * deg), at_yaw(8.5 * deg));
  int mixed = 0;
  for (const auto& e : fd.estimates) mixed += e.name.rfind("d2/d", 0) == 0;
  EXPECT_EQ(mixed, 4);
}

// Randomized single-bend configurations: translation closed form vs tracer.
TEST(ClosedForms, TranslationMatchesTracer) {
  const CavityConfig c = paper_cavity();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const bool yaw_bend = k % 2 == 0;
    const double da = yaw_bend ? 0.5 * deg * u(rng) : 0.0;
    const double db = yaw_bend ? 0.0 : 0.5 * deg * u(rng);
    const PendulumSpec s = bar(0.5e-3, da, db);
    PendulumPose ref = at_yaw(8.5 * deg);
    ref.pitch = 1e-3 * u(rng);
    const Vec3 v{10e-6 * u(rng), 10e-6 * u(rng), 0.0};
    PendulumPose plus = ref, minus = ref;
    plus.translation = v;
    minus.translation = -v;
    const RayPath base = solve_zigzag_path(c, s, ref);
    const double traced = 0.5 * (solve_zigzag_path(c, s, plus, base).roundtrip -
                                 solve_zigzag_path(c, s, minus, base).roundtrip);
    const double model = translation_path_change(std::hypot(v.x, v.y), std::atan2(v.y, v.x),
                                                 ref.yaw, ref.pitch, da, db);
    EXPECT_NEAR(traced, model, 1e-3 * std::abs(model) + 1e-14) << "sample " << k;
  }
}

TEST(ClosedForms, VerticalTranslationAndRoll) {
  const CavityConfig c = paper_cavity();
  const PendulumPose ref = at_yaw(8.5 * deg);
  {
    const double db = 0.3 * deg;
    const PendulumSpec s = bar(0.5e-3, 0.0, db);
    const double dz = 5e-6;
    const double traced = 0.5 * (solve_zigzag_path(c, s, apply_offset(ref, Dof::z, dz)).roundtrip -
                                 solve_zigzag_path(c, s, apply_offset(ref, Dof::z, -dz)).roundtrip);
    EXPECT_NEAR(traced, z_translation_path_change(dz, db), 1e-3 * dz * db);
  }
  {
    PendulumPose pitched = ref;
    pitched.pitch = 1e-3;
    const PendulumSpec s = bar(0.5e-3);
    const double l = solve_zigzag_path(c, s, pitched).beam_separation();
    const double g = 1e-4;
    const double traced =
        0.5 * (solve_zigzag_path(c, s, apply_offset(pitched, Dof::roll, g)).roundtrip -
               solve_zigzag_path(c, s, apply_offset(pitched, Dof::roll, -g)).roundtrip);
    const double model = roll_path_change(g, l, pitched.pitch);
    EXPECT_NEAR(traced, model, 1e-3 * std::abs(model));
  }
}

TEST(ClosedFormReport, FieldsMatchSlopes) {
  const CavityConfig c = paper_cavity();
  const ModeGeometry m = mode_geometry(c, 11e-3, 8.5 * deg);
  const SensitivityReport r = closed_form_report(c, m, 0.2 * deg, 1e-3);
  EXPECT_EQ(r.method, SensitivityMethod::closed_form);
  EXPECT_DOUBLE_EQ(r.yaw_hz_per_rad, yaw_sensitivity(c, m).hz);
  EXPECT_DOUBLE_EQ(r.pitch2_hz_per_rad2, pitch_sensitivity(c).hz);
  EXPECT_DOUBLE_EQ(r.transverse_hz_per_m, transverse_sensitivity(c, 0.2 * deg).hz);
  EXPECT_NEAR(r.roll_hz_per_rad, nu(c) / m.zig_length * 11e-3 * 1e-3, 1e-6);
}
