#include <gtest/gtest.h>

#include <cmath>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/sensing_range.hpp"

using namespace zigzag;
using constants::deg;
using constants::pi;

namespace {

constexpr double kG = 0.504;
constexpr double kW0 = 73e-6;
constexpr double kLambda = 780e-9;

// Composite Simpson on the real and imaginary parts of the tilted-Gaussian
// overlap in physical coordinates.
double simpson_overlap(double delta_alpha, double w0, double lambda) {
  const int n = 20000;
  const double a = -8 * w0, b = 8 * w0;
  const double h = (b - a) / n;
  const double k = 2 * pi / lambda;
  double re = 0.0, im = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = a + i * h;
    const double c = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    const double amp = std::sqrt(2 / pi) / w0 * std::exp(-2 * x * x / (w0 * w0));
    re += c * amp * std::cos(k * delta_alpha * x);
    im += c * amp * std::sin(k * delta_alpha * x);
  }
  re *= h / 3;
  im *= h / 3;
  return re * re + im * im;
}

}  // namespace

TEST(CouplingEfficiency, UnityAtZero) {
  const OverlapResult r = coupling_efficiency(0.0, kG, kW0, kLambda);
  EXPECT_NEAR(r.coupling_efficiency, 1.0, 1e-13);
  EXPECT_EQ(r.closed_form, 1.0);
}

TEST(CouplingEfficiency, OneOverEAtCharacteristicTilt) {
  const double da = kLambda / (pi * kW0);
  const OverlapResult r = coupling_efficiency(da * kG, kG, kW0, kLambda);
  EXPECT_NEAR(r.delta_alpha_tilt, da, 1e-18);
  EXPECT_NEAR(r.coupling_efficiency, std::exp(-1.0), 1e-12);
}

TEST(CouplingEfficiency, MatchesSimpsonOracle) {
  for (double dtheta : {1e-4, 5e-4, 1e-3, 2e-3, 4e-3}) {
    const OverlapResult r = coupling_efficiency(dtheta, kG, kW0, kLambda);
    EXPECT_NEAR(r.coupling_efficiency, simpson_overlap(dtheta / kG, kW0, kLambda), 1e-10);
  }
}

TEST(CouplingEfficiency, GoldenAtOneMilliradian) {
  const OverlapResult r = coupling_efficiency(1e-3, kG, kW0, kLambda);
  EXPECT_NEAR(r.coupling_efficiency, 0.711538291086466, 1e-12);
}

TEST(CouplingEfficiency, QuadratureEqualsClosedFormAcrossSpan) {
  const double span = 5 * kLambda / (pi * kW0);
  double prev = 2.0;
  for (int i = 0; i <= 200; ++i) {
    const double da = span * i / 200;
    const OverlapResult r = coupling_efficiency(da * kG, kG, kW0, kLambda);
    EXPECT_NEAR(r.coupling_efficiency, r.closed_form, 1e-10);
    EXPECT_LE(r.coupling_efficiency, prev + 1e-15);
    prev = r.coupling_efficiency;
  }
}

TEST(CouplingEfficiency, EvenInTilt) {
  const OverlapResult a = coupling_efficiency(1e-3, kG, kW0, kLambda);
  const OverlapResult b = coupling_efficiency(-1e-3, kG, kW0, kLambda);
  EXPECT_NEAR(a.coupling_efficiency, b.coupling_efficiency, 1e-14);
}

TEST(CouplingEfficiency, DomainErrors) {
  EXPECT_THROW(coupling_efficiency(1e-3, 0.0, kW0, kLambda), DomainError);
  EXPECT_THROW(coupling_efficiency(1e-3, -0.2, kW0, kLambda), DomainError);
  EXPECT_THROW(coupling_efficiency(1e-3, kG, 0.0, kLambda), DomainError);
}

TEST(SensingRange, PaperValue) {
  const double r = sensing_range(kG, kW0, kLambda);
  EXPECT_NEAR(r, 2 * kG * kLambda / (pi * kW0), 1e-18);
  EXPECT_NEAR(r / deg, 0.2, 0.02);
}

TEST(SensingRange, Scaling) {
  EXPECT_EQ(sensing_range(0.0, kW0, kLambda), 0.0);
  EXPECT_NEAR(sensing_range(kG, kW0 / 2, kLambda), 2 * sensing_range(kG, kW0, kLambda), 1e-18);
  EXPECT_THROW(sensing_range(-0.1, kW0, kLambda), DomainError);
  EXPECT_THROW(sensing_range(kG, 0.0, kLambda), DomainError);
}

TEST(SensingRange, TwiceTheOneOverEYaw) {
  for (double g : {0.1, 0.504, 0.9}) {
    for (double w0 : {50e-6, 73e-6, 120e-6}) {
      const double r = sensing_range(g, w0, kLambda);
      EXPECT_NEAR(r, 2 * one_over_e_yaw(g, w0, kLambda), 1e-8 * r);
    }
  }
}
