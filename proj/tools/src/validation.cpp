#include "zigzag_app/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "zigzag/cavity_modes.hpp"
#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/noise_budget.hpp"
#include "zigzag/raytrace.hpp"
#include "zigzag/sensing_range.hpp"
#include "zigzag/sensitivity.hpp"

namespace zigzag::app {

namespace {

using constants::deg;
using constants::pi;

std::string format_detail(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_oracle_suite(const RunConfig& config) {
  constexpr double kRelative = 1e-3;
  constexpr double kFloor = 1e-14;  // m, well above the solver's path-length noise

  CheckResult r{"oracle_suite", true, 0.0, kRelative, {}};
  std::mt19937_64 rng(config.validate.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double bend = 0.5 * deg;
  int failures = 0;
  int worst_sample = -1;

  for (int k = 0; k < config.validate.samples; ++k) {
    PendulumSpec spec = config.pendulum;
    spec.delta_alpha = bend * unit(rng);
    spec.delta_beta = bend * unit(rng);
    PendulumPose ref = config.pose;
    ref.pitch = 1e-3 * unit(rng);
    const Vec3 v{10e-6 * unit(rng), 10e-6 * unit(rng), 10e-6 * unit(rng)};
    const double gamma = 1e-3 * unit(rng);

    PendulumPose plus = ref;
    plus.translation = ref.translation + v;
    plus.roll = ref.roll + gamma;
    PendulumPose minus = ref;
    minus.translation = ref.translation - v;
    minus.roll = ref.roll - gamma;

    double traced = 0.0;
    double lever = 0.0;
    try {
      const RayPath base = solve_zigzag_path(config.cavity, spec, ref);
      const RayPath p = solve_zigzag_path(config.cavity, spec, plus, base);
      const RayPath m = solve_zigzag_path(config.cavity, spec, minus, base);
      traced = 0.5 * (p.roundtrip - m.roundtrip);
      lever = base.beam_separation();
    } catch (const std::exception&) {
      ++failures;
      r.passed = false;
      continue;
    }

    const double model_bend = spec.delta_alpha + config.validate.model_delta_alpha_offset;
    const double vh = std::hypot(v.x, v.y);
    const double phi = std::atan2(v.y, v.x);
    const double t1 =
        translation_path_change(vh, phi, ref.yaw, ref.pitch, model_bend, spec.delta_beta);
    const double t2 = z_translation_path_change(v.z, spec.delta_beta);
    const double t3 = roll_path_change(gamma, lever, ref.pitch);
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
    const double diff = std::abs(traced - (t1 + t2 + t3));
    const double rel = diff / std::max(scale, kFloor);
    if (rel > r.metric) {
      r.metric = rel;
      worst_sample = k;
    }
    if (diff > kRelative * scale + kFloor) {
      ++failures;
      r.passed = false;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d samples, %d outside tolerance, worst relative %.3e (sample %d)",
                config.validate.samples, failures, r.metric, worst_sample);
  r.detail = buf;
  return r;
}

CheckResult check_separation_forms(const RunConfig& config) {
  constexpr double kTolerance = 1e-10;
  CheckResult r{"separation_forms", true, 0.0, kTolerance, {}};
  const double radius = config.cavity.radius;
  const int n = 400;
  for (int i = 1; i < n; ++i) {
    const double g = 0.5 + 0.5 * i / n;
    const double a = no_pendulum_zigzag(g, radius).beam_separation;
    const double b = beam_separation_closed_form(g, radius);
    const double rel = std::abs(a - b) / std::max(std::abs(b), 1e-300);
    r.metric = std::max(r.metric, rel);
  }
  r.passed = r.metric <= kTolerance;
  r.detail = format_detail("worst relative difference %.3e over %.0f values of g", r.metric, n - 1);
  return r;
}

CheckResult check_overlap_quadrature(const RunConfig& config) {
  constexpr double kTolerance = 1e-10;
  CheckResult r{"overlap_quadrature", true, 0.0, kTolerance, {}};
  const double g = stability_parameter(config.cavity);
  const double w0 = beam_waist(config.cavity);
  const double lambda = config.cavity.wavelength;
  const double span = 5.0 * lambda / (pi * w0);
  const int n = 101;
  for (int i = 0; i < n; ++i) {
    const double delta_alpha = span * i / (n - 1);
    const OverlapResult o = coupling_efficiency(delta_alpha * g, g, w0, lambda);
    r.metric = std::max(r.metric, std::abs(o.coupling_efficiency - o.closed_form));
  }
  r.passed = r.metric <= kTolerance;
  r.detail = format_detail("worst absolute difference %.3e over %.0f tilts", r.metric, n);
  return r;
}

CheckResult check_psd_representation(const RunConfig& config) {
  constexpr double kTolerance = 1e-12;
  CheckResult r{"psd_representation", true, 0.0, kTolerance, {}};
  const auto grid = log_grid(config.f_min, config.f_max, config.points);
  const NoiseBudget b = total_budget(config.noise, grid, config.convention);
  const double slope2 = b.yaw_slope_hz_per_rad * b.yaw_slope_hz_per_rad;
  bool negative = false;
  const auto relerr = [](double a, double e) {
    return e == 0.0 ? std::abs(a) : std::abs(a - e) / std::abs(e);
  };
  auto sources = b.sources;
  sources.push_back(b.total);
  for (const auto& s : sources) {
    for (std::size_t i = 0; i < b.freq_hz.size(); ++i) {
      r.metric = std::max(r.metric, relerr(s.angle[i], b.susceptibility_sq[i] * s.torque[i]));
      r.metric = std::max(r.metric, relerr(s.frequency[i], slope2 * s.angle[i]));
      negative = negative || s.torque[i] < 0.0 || s.angle[i] < 0.0 || s.frequency[i] < 0.0;
    }
  }
  r.passed = r.metric <= kTolerance && !negative;
  r.detail = format_detail("worst relative identity error %.3e; negative values: %.0f",
                           r.metric, negative ? 1.0 : 0.0);
  return r;
}

ValidationReport run_validation(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ValidationReport report;
  report.checks.push_back(check_oracle_suite(config));
  report.checks.push_back(check_separation_forms(config));
  report.checks.push_back(check_overlap_quadrature(config));
  report.checks.push_back(check_psd_representation(config));
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace zigzag::app
