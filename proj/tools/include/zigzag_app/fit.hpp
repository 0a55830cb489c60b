#pragma once

#include <span>
#include <vector>

namespace zigzag::app {

/// Least-squares polynomial y = sum c_k x^k with one-sigma coefficient errors
/// from the residual scatter.
struct PolyFit {
  std::vector<double> coefficients;
  std::vector<double> errors;
  double residual_rms = 0.0;
};

/// Throws std::invalid_argument if there are fewer points than coefficients.
PolyFit polyfit(std::span<const double> x, std::span<const double> y, int degree);

}  // namespace zigzag::app
