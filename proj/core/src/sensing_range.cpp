#include "zigzag/sensing_range.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>

#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

using constants::pi;

namespace {

void check(double g, double w0, double wavelength) {
  if (!(g > 0.0)) throw DomainError("coupling efficiency requires g > 0");
  if (!(w0 > 0.0) || !(wavelength > 0.0)) {
    throw DomainError("waist and wavelength must be positive");
  }
}

// Amplitude overlap in units of the waist: the tilted mode picks up the phase
// exp(i k da x). The imaginary part vanishes by symmetry but is integrated anyway.
double overlap_sq(double phase_per_waist) {
  using boost::math::quadrature::gauss_kronrod;
  const double norm = std::sqrt(2.0 / pi);
  const auto re = [&](double u) { return norm * std::exp(-2.0 * u * u) * std::cos(phase_per_waist * u); };
  const auto im = [&](double u) { return norm * std::exp(-2.0 * u * u) * std::sin(phase_per_waist * u); };
  const double a = gauss_kronrod<double, 61>::integrate(re, -6.0, 6.0, 15, 1e-14);
  const double b = gauss_kronrod<double, 61>::integrate(im, -6.0, 6.0, 15, 1e-14);
  return a * a + b * b;
}

}  // namespace

OverlapResult coupling_efficiency(double delta_theta, double g, double w0, double wavelength) {
  check(g, w0, wavelength);
  OverlapResult r;
  r.delta_theta_yaw = delta_theta;
  r.delta_alpha_tilt = delta_theta / g;
  const double k = 2.0 * pi / wavelength;
  r.coupling_efficiency = overlap_sq(k * r.delta_alpha_tilt * w0);
  const double x = pi * w0 * r.delta_alpha_tilt / wavelength;
  r.closed_form = std::exp(-x * x);
  return r;
}

double sensing_range(double g, double w0, double wavelength) {
  if (!(g >= 0.0)) throw DomainError("sensing range requires g >= 0");
  if (!(w0 > 0.0) || !(wavelength > 0.0)) {
    throw DomainError("waist and wavelength must be positive");
  }
  return 2.0 * g * wavelength / (pi * w0);
}

double one_over_e_yaw(double g, double w0, double wavelength) {
  check(g, w0, wavelength);
  const double target = std::exp(-1.0);
  const auto f = [&](double dt) {
    return coupling_efficiency(dt, g, w0, wavelength).coupling_efficiency - target;
  };
  const double hi = 4.0 * g * wavelength / (pi * w0);
  std::uintmax_t iterations = 100;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, 0.0, hi, boost::math::tools::eps_tolerance<double>(50), iterations);
  if (iterations >= 100) throw NoConvergence("1/e bracket did not converge");
  return 0.5 * (a + b);
}

}  // namespace zigzag
