#include "zigzag_app/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zigzag::app {

PolyFit polyfit(std::span<const double> x, std::span<const double> y, int degree) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index p = degree + 1;
  if (degree < 0 || x.size() != y.size() || n < p) {
    throw std::invalid_argument("polyfit needs at least degree + 1 points");
  }
  // Fit in x / scale to keep the design matrix well conditioned.
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;

  Eigen::MatrixXd a(n, p);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = x[static_cast<std::size_t>(i)] / scale;
    double power = 1.0;
    for (Eigen::Index k = 0; k < p; ++k) {
      a(i, k) = power;
      power *= u;
    }
    b(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = a * c - b;
  const double dof = static_cast<double>(std::max<Eigen::Index>(n - p, 1));
  const double sigma2 = r.squaredNorm() / dof;
  const Eigen::MatrixXd cov = (a.transpose() * a).inverse() * sigma2;

  PolyFit fit;
  fit.residual_rms = std::sqrt(r.squaredNorm() / static_cast<double>(n));
  double unscale = 1.0;
  for (Eigen::Index k = 0; k < p; ++k) {
    fit.coefficients.push_back(c(k) * unscale);
    fit.errors.push_back(std::sqrt(std::max(cov(k, k), 0.0)) * unscale);
    unscale /= scale;
  }
  return fit;
}

}  // namespace zigzag::app
