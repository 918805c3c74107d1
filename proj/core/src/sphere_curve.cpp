// Copyright 2026 The lcexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcexact/sphere_curve.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lcexact/error.hpp"
#include "lcexact/quadrature.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string(name) + " must be finite");
  }
}

void require_valid_angle(double psi, const ModelParams& params,
                         const char* op) {
  require_finite(psi, "psi");
  const double m = params.margin(psi);
  if (!(m > kDomainMargin)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << op << ": beta*sin^2(psi) - 1 = " << m << " at psi = " << psi
        << " (must exceed " << kDomainMargin << ")";
    throw DomainViolation(msg.str(), psi, m);
  }
}

}  // namespace

ModelParams ModelParams::create(double beta, double delta1) {
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw InvalidArgument("beta must exceed 1");
  }
  if (!std::isfinite(delta1) || !(delta1 > 0.0) || !(delta1 < kPi / 2)) {
    throw InvalidArgument("delta1 must lie in (0, pi/2)");
  }
  const double s = std::sin(delta1);
  if (beta * s * s < 1.0 - kDomainMargin) {
    throw InvalidArgument("beta must be at least 1/sin^2(delta1)");
  }
  return ModelParams(beta, delta1);
}

double ModelParams::margin(double psi) const noexcept {
  const double s = std::sin(psi);
  return beta_ * s * s - 1.0;
}

Director director_from_angles(double psi, double phi) {
  require_finite(psi, "psi");
  require_finite(phi, "phi");
  const double sp = std::sin(psi);
  return {sp * std::cos(phi), sp * std::sin(phi), std::cos(psi)};
}

double phi_prime(double psi, const ModelParams& params) {
  require_valid_angle(psi, params, "phi_prime");
  return 1.0 / (std::sqrt(params.margin(psi)) * std::sin(psi));
}

double phi_of_psi(double psi, const ModelParams& params,
                  const CurveOptions& opts) {
  // sin^2 is smallest at the end of [pi/2, psi] farthest from pi/2.
  require_valid_angle(psi, params, "phi_of_psi");
  const double half = kPi / 2;
  if (psi == half) return 0.0;
  const double beta = params.beta();
  auto integrand = [beta](double s) {
    const double sn = std::sin(s);
    return 1.0 / (std::sqrt(beta * sn * sn - 1.0) * sn);
  };
  quad::AdaptiveOptions qo;
  qo.abs_tol = opts.abs_tol;
  const double a = std::min(half, psi);
  const double b = std::max(half, psi);
  const double v = quad::integrate_adaptive(integrand, a, b, qo).value;
  const double sign = (psi > half ? 1.0 : -1.0) * (opts.negative_branch ? -1.0 : 1.0);
  return sign * v;
}

double F_map(double psi, const ModelParams& params) {
  require_valid_angle(psi, params, "F_map");
  const double beta = params.beta();
  return std::acos(std::sqrt(beta / (beta - 1.0)) * std::cos(psi));
}

double F_inv(double f, const ModelParams& params) {
  if (!std::isfinite(f) || !(f > 0.0) || !(f < kPi)) {
    throw InvalidArgument("F_inv argument must lie in (0, pi)");
  }
  const double beta = params.beta();
  return std::acos(std::sqrt((beta - 1.0) / beta) * std::cos(f));
}

double delta2_of(const ModelParams& params) {
  const double d1 = params.delta1();
  const double m = params.margin(d1);
  if (!(m > kDomainMargin)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "delta2 is degenerate: beta*sin^2(delta1) - 1 = " << m;
    throw DegenerateMargin(msg.str(), d1, m);
  }
  return F_map(d1, params);
}

double metric_factor(double psi, const ModelParams& params) {
  require_valid_angle(psi, params, "metric_factor");
  const double s = std::sin(psi);
  const double bs = params.beta() * s * s;
  return bs / (bs - 1.0);
}

double ode_residual_phi(std::span<const double> psi_samples,
                        const ModelParams& params) {
  const std::size_t n = psi_samples.size();
  if (n < 3) throw InvalidArgument("ode_residual_phi needs at least 3 samples");
  const double h = psi_samples[1] - psi_samples[0];
  if (!(h > 0.0)) throw InvalidArgument("samples must be strictly increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double hi = psi_samples[i] - psi_samples[i - 1];
    if (std::abs(hi - h) > 1e-9 * h) {
      throw InvalidArgument("samples must be uniformly spaced");
    }
  }
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = phi_of_psi(psi_samples[i], params);

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double psi = psi_samples[i];
    const double d1 = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    const double d2 = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
    const double s = std::sin(psi);
    const double c = std::cos(psi);
    const double res = d2 * s * s + 2.0 * d1 * c * s + d1 * d1 * d1 * c * s * s * s;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

std::vector<double> phi_range_growth(std::span<const double> delta1_list,
                                     double eps, double beta_margin) {
  if (!(eps > 0.0) || !(beta_margin > 0.0)) {
    throw InvalidArgument("eps and beta_margin must be positive");
  }
  std::vector<double> out;
  out.reserve(delta1_list.size());
  for (double d1 : delta1_list) {
    if (!std::isfinite(d1) || !(d1 > 0.0) || !(d1 < kPi / 2)) {
      throw InvalidArgument("delta1 must lie in (0, pi/2)");
    }
    const double s = std::sin(d1);
    const ModelParams params = ModelParams::create(1.0 / (s * s) + beta_margin, d1);
    out.push_back(std::abs(phi_of_psi(kPi - d1 - eps, params)));
  }
  return out;
}

}  // namespace lcexact
