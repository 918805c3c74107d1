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

#include "lcexact/quadrature.hpp"

#include <numbers>

namespace lcexact::quad {

GaussLegendreRule make_gauss_legendre(int order) {
  if (order < 1) throw InvalidArgument("Gauss-Legendre order must be positive");
  const int n = order;
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Roots are symmetric; solve for the upper half and mirror.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussLegendreRule& gauss_legendre(int order) {
  static const GaussLegendreRule r4 = make_gauss_legendre(4);
  static const GaussLegendreRule r8 = make_gauss_legendre(8);
  static const GaussLegendreRule r16 = make_gauss_legendre(16);
  static const GaussLegendreRule r32 = make_gauss_legendre(32);
  static const GaussLegendreRule r64 = make_gauss_legendre(64);
  static const GaussLegendreRule r128 = make_gauss_legendre(128);
  switch (order) {
    case 4: return r4;
    case 8: return r8;
    case 16: return r16;
    case 32: return r32;
    case 64: return r64;
    case 128: return r128;
    default:
      throw InvalidArgument("no cached Gauss-Legendre rule of order " +
                            std::to_string(order));
  }
}

}  // namespace lcexact::quad
