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

#ifndef LCEXACT_QUADRATURE_HPP
#define LCEXACT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lcexact/error.hpp"

namespace lcexact::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds an n-point rule by Newton iteration on P_n.
GaussLegendreRule make_gauss_legendre(int order);

/// Cached rule for order in {4, 8, 16, 32, 64, 128}; other orders throw.
const GaussLegendreRule& gauss_legendre(int order);

template <class F>
double integrate_fixed(F&& f, double a, double b,
                       const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  int high_order = 64;
  int low_order = 32;
  int max_panels = 4096;
  /// Initial panels are subdivided until no wider than this.
  double max_initial_width = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Adaptive composite Gauss-Legendre quadrature.
///
/// [a, b] is first split at the breakpoints that fall strictly inside it
/// (and further into equal pieces no wider than max_initial_width). Each
/// panel is accepted when |Q_high - Q_low| is below its share of abs_tol
/// (proportional to width), otherwise bisected. Accepted panels are summed
/// left to right, so the result depends only on the inputs.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const AdaptiveOptions& opts,
                                    std::span<const double> breakpoints = {}) {
  QuadratureResult out;
  if (!(b > a)) return out;

  const GaussLegendreRule& hi = gauss_legendre(opts.high_order);
  const GaussLegendreRule& lo = gauss_legendre(opts.low_order);
  const double total = b - a;

  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  struct Panel {
    double a, b;
  };
  std::vector<Panel> stack;
  int used = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double ca = cuts[c];
    const double cb = cuts[c + 1];
    int pieces = 1;
    if (std::isfinite(opts.max_initial_width) && opts.max_initial_width > 0) {
      pieces = std::max(
          1, static_cast<int>(std::ceil((cb - ca) / opts.max_initial_width)));
    }
    for (int k = 0; k < pieces; ++k) {
      const double pa = ca + (cb - ca) * k / pieces;
      const double pb = (k + 1 == pieces) ? cb : ca + (cb - ca) * (k + 1) / pieces;
      stack.push_back({pa, pb});
      // Process this initial panel (and its children) before the next one.
      while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        ++used;
        const double qh = integrate_fixed(f, p.a, p.b, hi);
        const double ql = integrate_fixed(f, p.a, p.b, lo);
        const double err = std::abs(qh - ql);
        const double width = p.b - p.a;
        const double local_tol =
            std::max(opts.abs_tol * (width / total), 1e-15 * std::abs(qh));
        const double mid = 0.5 * (p.a + p.b);
        const bool unsplittable = !(mid > p.a && mid < p.b);
        if (err <= local_tol || unsplittable) {
          out.value += qh;
          out.error_estimate += err;
          continue;
        }
        if (used + static_cast<int>(stack.size()) + 2 > opts.max_panels) {
          throw NumericalError(
              "adaptive quadrature exceeded its panel budget on [" +
                  std::to_string(a) + ", " + std::to_string(b) +
                  "], achieved error estimate " + std::to_string(err),
              err);
        }
        stack.push_back({mid, p.b});
        stack.push_back({p.a, mid});
      }
    }
  }
  out.panels = used;
  return out;
}

}  // namespace lcexact::quad

#endif  // LCEXACT_QUADRATURE_HPP
