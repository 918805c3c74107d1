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

// Reference computations used only by tests. None of these call into the
// library's quadrature or Bessel code.

#ifndef LCEXACT_TESTS_ORACLES_HPP
#define LCEXACT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace lcexact::oracle {

constexpr double kPi = std::numbers::pi;

template <class F>
double composite_simpson(F&& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Gauss-Kronrod (61 points) over [a, b] split at the given cuts.
template <class F>
double gk(F&& f, double a, double b, const std::vector<double>& cuts = {},
          double tol = 1e-14) {
  std::vector<double> pts{a};
  for (double c : cuts) {
    if (c > a && c < b) pts.push_back(c);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] > pts[i]) {
      sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          f, pts[i], pts[i + 1], 20, tol);
    }
  }
  return sum;
}

/// exp(-x) sum_{k<terms} (x/2)^{2k+nu} / (k! (k+nu)!).
inline double series_ie(double x, int nu, int terms = 30) {
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    double term = std::pow(0.5 * x, 2 * k + nu);
    for (int j = 2; j <= k; ++j) term /= j;
    for (int j = 2; j <= k + nu; ++j) term /= j;
    sum += term;
  }
  return std::exp(-x) * sum;
}

/// Hankel asymptotic series of exp(-x) I_nu(x), summed to the given number
/// of terms (terms <= 0: until terms stop decreasing or drop below 1e-18).
inline double asymptotic_ie(double x, int nu, int terms = 0) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  const int limit = terms > 0 ? terms : 200;
  for (int k = 1; k < limit; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
    if (terms <= 0 && (std::abs(next) >= std::abs(term) ||
                       std::abs(next) < 1e-18 * std::abs(sum))) {
      break;
    }
    term = next;
    sum += term;
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

/// (Gamma_t * f)(x) for x = (r, 0) by a Cartesian tensor-product quadrature
/// over the plane. `radii` lists radii where f has kinks; the inner
/// integral is split where the line y1 = const crosses those circles. The
/// outer integrand has square-root endpoint behavior at +-radii, so each
/// outer segment is mapped by y = a + (b - a)(3s^2 - 2s^3).
inline double heat2d_cartesian(const std::function<double(double)>& f,
                               double t, double r,
                               const std::vector<double>& radii = {},
                               double width = 12.0, double tol = 1e-14) {
  const double reach = width * std::sqrt(t);
  std::vector<double> outer_cuts;
  for (double R : radii) {
    outer_cuts.push_back(R);
    outer_cuts.push_back(-R);
  }
  auto inner = [&](double y1) {
    std::vector<double> cuts;
    for (double R : radii) {
      if (R > std::abs(y1)) cuts.push_back(std::sqrt(R * R - y1 * y1));
    }
    const double dx = r - y1;
    auto g = [&](double y2) {
      const double rho = std::hypot(y1, y2);
      return std::exp(-(dx * dx + y2 * y2) / (4.0 * t)) * f(rho);
    };
    return 2.0 * gk(g, 0.0, reach, cuts, tol);
  };
  std::vector<double> pts{r - reach};
  for (double c : outer_cuts) {
    if (c > r - reach && c < r + reach) pts.push_back(c);
  }
  pts.push_back(r + reach);
  std::sort(pts.begin(), pts.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double w = pts[i + 1] - a;
    if (w <= 0.0) continue;
    auto mapped = [&](double s) {
      return inner(a + w * s * s * (3.0 - 2.0 * s)) * 6.0 * w * s * (1.0 - s);
    };
    sum += gk(mapped, 0.0, 1.0, {}, tol);
  }
  return sum / (4.0 * kPi * t);
}

/// 4D Gaussian convolution of the radial function g on the sphere of
/// radius r, reduced over the two trivial angles:
///   int_0^inf int_0^pi g(rho) (4 pi t)^-2 exp(-|x-y|^2/(4t)) 4 pi rho^3
///   sin^2(th) dth drho.
inline double heat4d_polar(const std::function<double(double)>& g, double t,
                           double r, const std::vector<double>& radii = {},
                           double width = 12.0, double tol = 1e-14) {
  const double reach = width * std::sqrt(t);
  auto radial = [&](double rho) {
    auto ang = [&](double th) {
      const double q = (r - rho) * (r - rho) + 2.0 * r * rho * (1.0 - std::cos(th));
      const double s = std::sin(th);
      return std::exp(-q / (4.0 * t)) * s * s;
    };
    return g(rho) * 4.0 * kPi * rho * rho * rho * gk(ang, 0.0, kPi, {}, tol);
  };
  const double pref = 1.0 / (16.0 * kPi * kPi * t * t);
  return pref * gk(radial, std::max(0.0, r - reach), r + reach, radii, tol);
}

/// 2D heat flow of exp(-rho^2/(4s)): (s/(s+t)) exp(-r^2/(4(s+t))).
inline double gaussian2d(double s, double t, double r) {
  return s / (s + t) * std::exp(-r * r / (4.0 * (s + t)));
}

/// 4D heat flow of exp(-rho^2): (1+4t)^-2 exp(-r^2/(1+4t)).
inline double gaussian4d(double t, double r) {
  const double a = 1.0 + 4.0 * t;
  return std::exp(-r * r / a) / (a * a);
}

/// Swirl solution for u0 = r exp(-r^2).
inline double swirl_u(double t, double r) { return r * gaussian4d(t, r); }

}  // namespace lcexact::oracle

#endif  // LCEXACT_TESTS_ORACLES_HPP
