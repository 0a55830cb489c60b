#pragma once

#include <string>
#include <vector>

#include "zigzag_app/config.hpp"

namespace zigzag::app {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     ///< worst observed error in the check's own measure
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_passed() const;
};

/// Randomized poses about the configured cavity and pendulum: ray-traced
/// path change (odd part under p -> -p) against the translation, vertical and
/// roll closed forms. Metric: worst |trace - model| / sum|model terms|.
CheckResult check_oracle_suite(const RunConfig& config);

/// Tan-delta construction against the beam-separation formula over 1/2 < g < 1.
CheckResult check_separation_forms(const RunConfig& config);

/// Overlap quadrature against exp(-(pi w0 da / lambda)^2).
CheckResult check_overlap_quadrature(const RunConfig& config);

/// Torque/angle/frequency identities of the noise budget on its grid.
CheckResult check_psd_representation(const RunConfig& config);

ValidationReport run_validation(const RunConfig& config);

}  // namespace zigzag::app
