#include "zigzag_app/commands.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/cavity_modes.hpp"
#include "zigzag/constants.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/noise_budget.hpp"
#include "zigzag/raytrace.hpp"
#include "zigzag/sensing_range.hpp"
#include "zigzag/sensitivity.hpp"
#include "zigzag_app/fit.hpp"
#include "zigzag_app/validation.hpp"

namespace zigzag::app {

namespace {

using json = nlohmann::ordered_json;
using constants::deg;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

using Rows = std::vector<std::pair<std::string, double>>;

void write_rows(const Rows& rows, std::string_view schema, const RunConfig& config,
                std::ostream& out) {
  if (config.format == Format::json) {
    json j;
    j["schema"] = schema;
    for (const auto& [k, v] : rows) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  out << "quantity,value\n";
  for (const auto& [k, v] : rows) out << k << "," << num(v) << "\n";
}

int cmd_modes(const RunConfig& config, std::ostream& out) {
  const CavityConfig& cfg = config.cavity;
  cfg.validate();
  const double g = stability_parameter(cfg);
  if (!(g > 0.5 && g < 1.0)) {
    throw DomainError("the no-pendulum zigzag mode only exists if 1/2 < g < 1 (g = " + num(g) + ")");
  }
  const ModeGeometry mode = mode_geometry(cfg);
  const ModeFrequencies f = mode_frequencies(cfg, mode.beam_separation);
  const Slope yaw = yaw_sensitivity(cfg, mode);
  Rows rows{
      {"L_mm", cfg.length * 1e3},
      {"R_mm", cfg.radius * 1e3},
      {"g", g},
      {"l_mm", mode.beam_separation * 1e3},
      {"delta_deg", mode.delta_angle / deg},
      {"operating_yaw_deg", mode.operating_yaw / deg},
      {"w0_um", mode.waist * 1e6},
      {"L_zig_mm", mode.zig_length * 1e3},
      {"fsr_on_Hz", f.fsr_on},
      {"fsr_zig_Hz", f.fsr_zig},
      {"linewidth_on_Hz", f.linewidth_on},
      {"linewidth_zig_Hz", f.linewidth_zig},
      {"transverse_spacing_0_3_Hz", transverse_mode_spacing(cfg, 0, 3)},
      {"yaw_slope_Hz_per_rad", yaw.hz},
      {"yaw_S_per_rad", yaw.S},
  };
  if (config.l_target) rows.emplace_back("l_target_mm", *config.l_target * 1e3);
  write_rows(rows, "zigzag.modes/1", config, out);
  return exit_ok;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& log) {
  config.cavity.validate();
  config.pendulum.validate();
  const SweepSpec& s = config.sweep;
  std::vector<double> grid(static_cast<std::size_t>(s.count));
  for (int i = 0; i < s.count; ++i) {
    grid[static_cast<std::size_t>(i)] = s.min + (s.max - s.min) * i / (s.count - 1);
  }
  const SweepResult result = sweep(config.cavity, config.pendulum, config.pose, s.dof, grid);

  const bool angular = is_angular(s.dof);
  const std::string unit = angular ? "urad" : "um";
  const std::string per = angular ? "rad" : "m";
  const int degree = s.dof == Dof::pitch ? 2 : 1;

  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : result.points) {
    x.push_back(p.offset);
    y.push_back(p.shift_hz);
  }
  std::optional<PolyFit> fit;
  if (static_cast<int>(x.size()) > degree + 1) fit = polyfit(x, y, degree);

  if (config.format == Format::json) {
    json j;
    j["schema"] = "zigzag.sweep/1";
    j["dof"] = std::string(to_string(s.dof));
    j["offset_unit"] = unit;
    j["note"] = std::string(gouy_phase_note);
    j["reference_roundtrip_m"] = result.reference.roundtrip;
    json points = json::array();
    for (const auto& p : result.points) {
      points.push_back({{"offset_" + unit, p.offset * 1e6},
                        {"shift_Hz", p.shift_hz},
                        {"roundtrip_m", p.roundtrip}});
    }
    j["points"] = std::move(points);
    if (fit) {
      json f;
      f["model"] = degree == 1 ? "linear" : "quadratic";
      f["coefficients"] = fit->coefficients;
      f["errors"] = fit->errors;
      f["residual_rms_Hz"] = fit->residual_rms;
      j["fit"] = std::move(f);
    } else {
      j["fit"] = nullptr;
    }
    j["range_exceeded_at_" + unit] =
        result.range_exceeded_at ? json(*result.range_exceeded_at * 1e6) : json(nullptr);
    j["stop_reason"] = result.stop_reason;
    out << j.dump(2) << "\n";
  } else {
    out << "offset_" << unit << ",shift_Hz,roundtrip_m\n";
    for (const auto& p : result.points) {
      out << num(p.offset * 1e6) << "," << num(p.shift_hz) << "," << num(p.roundtrip) << "\n";
    }
    if (fit && degree == 1) {
      out << "# fit model=linear slope_Hz_per_" << per << "=" << num(fit->coefficients[1])
          << " slope_err_Hz_per_" << per << "=" << num(fit->errors[1])
          << " intercept_Hz=" << num(fit->coefficients[0]) << "\n";
    } else if (fit) {
      out << "# fit model=quadratic curvature_Hz_per_" << per << "2=" << num(fit->coefficients[2])
          << " curvature_err=" << num(fit->errors[2]) << " linear_Hz_per_" << per << "="
          << num(fit->coefficients[1]) << " linear_err=" << num(fit->errors[1])
          << " intercept_Hz=" << num(fit->coefficients[0]) << "\n";
    }
    if (result.range_exceeded_at) {
      out << "# range_exceeded_at_" << unit << "=" << num(*result.range_exceeded_at * 1e6)
          << " reason=" << result.stop_reason << "\n";
    }
    out << "# " << gouy_phase_note << "\n";
  }
  if (result.range_exceeded_at) {
    log << "sweep stopped at " << num(*result.range_exceeded_at * 1e6) << " " << unit << ": "
        << result.stop_reason << "\n";
  }
  return exit_ok;
}

int cmd_noise(const RunConfig& config, std::ostream& out) {
  const auto grid = log_grid(config.f_min, config.f_max, config.points);
  const NoiseBudget b = total_budget(config.noise, grid, config.convention);
  auto sources = b.sources;
  sources.push_back(b.total);

  if (config.format == Format::json) {
    json j;
    j["schema"] = "zigzag.noise/1";
    j["convention"] = std::string(to_string(b.convention));
    j["yaw_slope_Hz_per_rad"] = b.yaw_slope_hz_per_rad;
    j["units"] = {{"torque", "N^2 m^2/Hz"}, {"angle", "rad^2/Hz"}, {"frequency", "Hz^2/Hz"}};
    j["f_Hz"] = b.freq_hz;
    j["susceptibility_sq_rad2_per_N2m2"] = b.susceptibility_sq;
    json src;
    for (const auto& s : sources) {
      src[s.name] = {{"torque", s.torque}, {"angle", s.angle}, {"frequency", s.frequency}};
    }
    j["sources"] = std::move(src);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "f_Hz";
  for (const auto& s : sources) {
    out << "," << s.name << "_torque_N2m2_per_Hz," << s.name << "_angle_rad2_per_Hz," << s.name
        << "_freq_Hz2_per_Hz";
  }
  out << "\n";
  for (std::size_t i = 0; i < b.freq_hz.size(); ++i) {
    out << num(b.freq_hz[i]);
    for (const auto& s : sources) {
      out << "," << num(s.torque[i]) << "," << num(s.angle[i]) << "," << num(s.frequency[i]);
    }
    out << "\n";
  }
  return exit_ok;
}

int cmd_range(const RunConfig& config, std::ostream& out) {
  const CavityConfig& cfg = config.cavity;
  cfg.validate();
  const double g = stability_parameter(cfg);
  const double w0 = beam_waist(cfg);
  const double theta = sensing_range(g, w0, cfg.wavelength);
  const double half = one_over_e_yaw(g, w0, cfg.wavelength);
  const int n = 41;

  std::vector<OverlapResult> table;
  for (int i = 0; i < n; ++i) {
    table.push_back(coupling_efficiency(theta * i / (n - 1), g, w0, cfg.wavelength));
  }
  if (config.format == Format::json) {
    json j;
    j["schema"] = "zigzag.range/1";
    j["g"] = g;
    j["w0_m"] = w0;
    j["theta_rng_rad"] = theta;
    j["theta_rng_deg"] = theta / deg;
    j["one_over_e_yaw_rad"] = half;
    json rows = json::array();
    for (const auto& o : table) {
      rows.push_back({{"delta_theta_rad", o.delta_theta_yaw},
                      {"delta_alpha_rad", o.delta_alpha_tilt},
                      {"efficiency_quadrature", o.coupling_efficiency},
                      {"efficiency_closed_form", o.closed_form}});
    }
    j["overlap"] = std::move(rows);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "delta_theta_rad,delta_alpha_rad,efficiency_quadrature,efficiency_closed_form\n";
  for (const auto& o : table) {
    out << num(o.delta_theta_yaw) << "," << num(o.delta_alpha_tilt) << ","
        << num(o.coupling_efficiency) << "," << num(o.closed_form) << "\n";
  }
  out << "# g=" << num(g) << " w0_m=" << num(w0) << " theta_rng_rad=" << num(theta)
      << " theta_rng_deg=" << num(theta / deg) << " one_over_e_yaw_rad=" << num(half) << "\n";
  return exit_ok;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const ValidationReport report = run_validation(config);
  if (config.format == Format::json) {
    json j;
    j["schema"] = "zigzag.validate/1";
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"metric", c.metric},
                        {"tolerance", c.tolerance},
                        {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    j["passed"] = report.all_passed();
    out << j.dump(2) << "\n";
  } else {
    out << "check,passed,metric,tolerance,detail\n";
    for (const auto& c : report.checks) {
      out << c.name << "," << (c.passed ? "true" : "false") << "," << num(c.metric) << ","
          << num(c.tolerance) << ",\"" << c.detail << "\"\n";
    }
  }
  for (const auto& c : report.checks) {
    log << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "validation took %.2f s\n", report.seconds);
  log << buf;
  return report.all_passed() ? exit_ok : exit_validation_failed;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "modes") return Command::modes;
  if (name == "sweep") return Command::sweep;
  if (name == "noise") return Command::noise;
  if (name == "range") return Command::range;
  if (name == "validate") return Command::validate;
  return std::nullopt;
}

int run_command(Command command, const RunConfig& config, std::ostream& out, std::ostream& log) {
  switch (command) {
    case Command::modes:
      return cmd_modes(config, out);
    case Command::sweep:
      return cmd_sweep(config, out, log);
    case Command::noise:
      return cmd_noise(config, out);
    case Command::range:
      return cmd_range(config, out);
    case Command::validate:
      return cmd_validate(config, out, log);
  }
  return exit_config_error;
}

int run_guarded(Command command, const RunConfig& config, std::ostream& out, std::ostream& log) {
  try {
    return run_command(command, config, out, log);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const DomainError& e) {
    log << "domain error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const NoSolution& e) {
    log << "no solution: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const NoConvergence& e) {
    log << "no convergence: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
}

}  // namespace zigzag::app
