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

#ifndef LCEXACT_RADIAL_PROFILE_HPP
#define LCEXACT_RADIAL_PROFILE_HPP

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace lcexact {

enum class DecayKind {
  kCompact,   ///< f == far_value for r > scale
  kGaussian,  ///< |f - far_value| <= C exp(-r^2 / scale^2)
  kBounded,   ///< no decay information
};

struct Decay {
  DecayKind kind = DecayKind::kBounded;
  double scale = std::numeric_limits<double>::infinity();
};

enum class ProfileKind {
  kConstant,
  kGaussianBump,
  kTanhStep,
  kSwirlGaussian,
  kTable,
  kLogTable,
  kComposed,
  kCustom,
};

/// Metadata attached to profiles built from arbitrary callables.
struct ProfileTraits {
  Decay decay;
  /// Value approached as r -> infinity (0 when unknown).
  double far_value = 0.0;
  /// Points where the profile has a kink or jump.
  std::vector<double> breakpoints;
  /// Length over which the profile varies smoothly.
  double feature_scale = std::numeric_limits<double>::infinity();
};

/// Multiplier applied to a Gaussian decay scale to obtain a truncation
/// radius; exp(-49) is far below double resolution of O(1) data.
inline constexpr double kGaussianCutoff = 7.0;

/// A radial function r -> f(r), r >= 0.
///
/// Immutable value type; copies share the underlying representation.
/// Sampled tables interpolate linearly (in r, or in log r for log tables)
/// and hold their end values outside the sampled range.
class RadialProfile {
 public:
  static RadialProfile constant(double value);
  /// center + amplitude * exp(-r^2 / sigma^2).
  static RadialProfile gaussian_bump(double center, double amplitude,
                                     double sigma);
  /// inner + (outer - inner) * (1 + tanh((r - radius) / width)) / 2.
  static RadialProfile tanh_step(double inner, double outer, double radius,
                                 double width);
  /// amplitude * r * exp(-r^2 / sigma^2).
  static RadialProfile swirl_gaussian(double amplitude, double sigma);
  static RadialProfile table(std::vector<double> radii,
                             std::vector<double> values);
  /// Piecewise linear in s = log r between the given nodes.
  static RadialProfile log_table(std::vector<double> log_radii,
                                 std::vector<double> values);
  static RadialProfile from_function(std::function<double(double)> fn,
                                     ProfileTraits traits);

  /// map(f(r)); decay and breakpoints are inherited.
  RadialProfile mapped(std::function<double(double)> map) const;

  /// f(r) / r with the r -> 0 limit taken from the derivative at 0.
  RadialProfile divided_by_radius() const;

  double operator()(double r) const;

  ProfileKind kind() const noexcept;
  Decay decay() const noexcept;
  double far_value() const noexcept;
  /// Radius beyond which f - far_value is negligible (infinity if unknown).
  double support_radius() const noexcept;
  double feature_scale() const noexcept;
  std::span<const double> breakpoints() const noexcept;

  /// Node data for kLogTable profiles, empty otherwise.
  std::span<const double> log_nodes() const noexcept;
  std::span<const double> node_values() const noexcept;

 private:
  struct Impl;
  explicit RadialProfile(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace lcexact

#endif  // LCEXACT_RADIAL_PROFILE_HPP
