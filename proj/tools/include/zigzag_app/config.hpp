#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "zigzag/constants.hpp"
#include "zigzag/geometry.hpp"
#include "zigzag/noise_budget.hpp"
#include "zigzag/raytrace.hpp"

namespace zigzag::app {

/// Malformed file, unknown key, bad value or conflicting keys. Maps to exit 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct SweepSpec {
  Dof dof = Dof::yaw;
  double min = -1.5e-6;  ///< rad or m
  double max = 1.5e-6;
  int count = 31;
};

struct ValidateSpec {
  int samples = 1000;
  std::uint64_t seed = 1;
  /// Added to the bend used by the closed forms only; nonzero values make the
  /// oracle check fail on purpose.
  double model_delta_alpha_offset = 0.0;
};

struct RunConfig {
  CavityConfig cavity{24.8e-3, 50e-3, 780e-9, 880.0, 230.0, {}};
  /// Set when the cavity length was derived from a target beam separation.
  std::optional<double> l_target;
  PendulumSpec pendulum{11e-3, 1e-3, 0.0, 6e-6};
  PendulumPose pose{8.5 * constants::deg, 0.0, 0.0, {}};
  NoiseParams noise;
  double f_min = 0.1;
  double f_max = 1000.0;
  int points = 400;
  ShotConvention convention = ShotConvention::sql;
  SweepSpec sweep;
  Format format = Format::csv;
  std::string output_path;
  ValidateSpec validate;
};

/// Parses sectioned key = value text. Every key carries its unit in the name
/// (L_mm, P_in_uW, ...). Environment variables ZIGZAG_<SECTION>_<KEY>
/// (upper-cased) override file values. Throws ConfigError.
RunConfig parse_config(const std::string& text, bool use_environment = true);

/// Reads `path` (empty = defaults only) and parses it.
RunConfig load_config(const std::string& path, bool use_environment = true);

std::optional<Format> parse_format(const std::string& name);

/// One line per accepted key, with its unit and default.
std::string config_reference();

}  // namespace zigzag::app
