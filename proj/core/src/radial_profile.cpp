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

#include "lcexact/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "lcexact/error.hpp"

namespace lcexact {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// tanh((r-R)/w) is within 4e-18 of 1 beyond R + 20 w.
constexpr double kTanhCutoff = 20.0;

struct Constant {
  double value;
};
struct GaussianBump {
  double center, amplitude, sigma;
};
struct TanhStep {
  double inner, outer, radius, width;
};
struct SwirlGaussian {
  double amplitude, sigma;
};
struct Table {
  std::vector<double> x;  // r or log r
  std::vector<double> f;
  bool logarithmic;
};
struct Composed {
  RadialProfile inner;
  std::function<double(double)> map;
};
struct Custom {
  std::function<double(double)> fn;
};

double interpolate(const Table& t, double x) {
  if (x <= t.x.front()) return t.f.front();
  if (x >= t.x.back()) return t.f.back();
  const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - t.x.begin());
  const double x0 = t.x[j - 1];
  const double x1 = t.x[j];
  const double w = (x - x0) / (x1 - x0);
  return t.f[j - 1] + w * (t.f[j] - t.f[j - 1]);
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

}  // namespace

struct RadialProfile::Impl {
  ProfileKind kind;
  std::variant<Constant, GaussianBump, TanhStep, SwirlGaussian, Table,
               Composed, Custom>
      data;
  ProfileTraits traits;

  double eval(double r) const {
    return std::visit(
        [r](const auto& d) -> double {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return d.value;
          } else if constexpr (std::is_same_v<T, GaussianBump>) {
            const double q = r / d.sigma;
            return d.center + d.amplitude * std::exp(-q * q);
          } else if constexpr (std::is_same_v<T, TanhStep>) {
            return d.inner + (d.outer - d.inner) * 0.5 *
                                 (1.0 + std::tanh((r - d.radius) / d.width));
          } else if constexpr (std::is_same_v<T, SwirlGaussian>) {
            const double q = r / d.sigma;
            return d.amplitude * r * std::exp(-q * q);
          } else if constexpr (std::is_same_v<T, Table>) {
            if (d.logarithmic) {
              if (!(r > 0.0)) return d.f.front();
              return interpolate(d, std::log(r));
            }
            return interpolate(d, r);
          } else if constexpr (std::is_same_v<T, Composed>) {
            return d.map(d.inner(r));
          } else {
            return d.fn(r);
          }
        },
        data);
  }
};

RadialProfile::RadialProfile(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

RadialProfile RadialProfile::constant(double value) {
  require_finite(value, "constant value");
  ProfileTraits tr;
  tr.decay = {DecayKind::kCompact, 0.0};
  tr.far_value = value;
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kConstant, Constant{value}, std::move(tr)}));
}

RadialProfile RadialProfile::gaussian_bump(double center, double amplitude,
                                           double sigma) {
  require_finite(center, "center");
  require_finite(amplitude, "amplitude");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw InvalidArgument("sigma must be positive");
  }
  ProfileTraits tr;
  tr.decay = {DecayKind::kGaussian, sigma};
  tr.far_value = center;
  tr.feature_scale = sigma;
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kGaussianBump, GaussianBump{center, amplitude, sigma},
           std::move(tr)}));
}

RadialProfile RadialProfile::tanh_step(double inner, double outer,
                                       double radius, double width) {
  require_finite(inner, "inner");
  require_finite(outer, "outer");
  require_finite(radius, "radius");
  if (!std::isfinite(width) || !(width > 0.0)) {
    throw InvalidArgument("width must be positive");
  }
  ProfileTraits tr;
  tr.decay = {DecayKind::kCompact, std::max(0.0, radius + kTanhCutoff * width)};
  tr.far_value = outer;
  tr.feature_scale = width;
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kTanhStep, TanhStep{inner, outer, radius, width},
           std::move(tr)}));
}

RadialProfile RadialProfile::swirl_gaussian(double amplitude, double sigma) {
  require_finite(amplitude, "amplitude");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw InvalidArgument("sigma must be positive");
  }
  ProfileTraits tr;
  // r exp(-r^2/s^2) <= exp(-r^2/(2 s^2)) for large r; use the wider scale.
  tr.decay = {DecayKind::kGaussian, sigma * std::sqrt(2.0)};
  tr.far_value = 0.0;
  tr.feature_scale = sigma;
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kSwirlGaussian, SwirlGaussian{amplitude, sigma},
           std::move(tr)}));
}

RadialProfile RadialProfile::table(std::vector<double> radii,
                                   std::vector<double> values) {
  if (radii.empty() || radii.size() != values.size()) {
    throw InvalidArgument("table needs equally many radii and values (>= 1)");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require_finite(radii[i], "table radius");
    require_finite(values[i], "table value");
    if (radii[i] < 0.0) throw InvalidArgument("table radii must be >= 0");
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw InvalidArgument("table radii must be strictly increasing");
    }
  }
  ProfileTraits tr;
  tr.decay = {DecayKind::kCompact, radii.back()};
  tr.far_value = values.back();
  tr.breakpoints = radii;
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kTable,
           Table{std::move(radii), std::move(values), false}, std::move(tr)}));
}

RadialProfile RadialProfile::log_table(std::vector<double> log_radii,
                                       std::vector<double> values) {
  if (log_radii.empty() || log_radii.size() != values.size()) {
    throw InvalidArgument("log table needs equally many nodes and values (>= 1)");
  }
  for (std::size_t i = 0; i < log_radii.size(); ++i) {
    require_finite(log_radii[i], "log radius");
    require_finite(values[i], "log table value");
    if (i > 0 && !(log_radii[i] > log_radii[i - 1])) {
      throw InvalidArgument("log radii must be strictly increasing");
    }
  }
  ProfileTraits tr;
  tr.decay = {DecayKind::kCompact, std::exp(log_radii.back())};
  tr.far_value = values.back();
  for (double s : log_radii) {
    const double r = std::exp(s);
    if (std::isfinite(r)) tr.breakpoints.push_back(r);
  }
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kLogTable,
           Table{std::move(log_radii), std::move(values), true},
           std::move(tr)}));
}

RadialProfile RadialProfile::from_function(std::function<double(double)> fn,
                                           ProfileTraits traits) {
  if (!fn) throw InvalidArgument("profile function is empty");
  std::sort(traits.breakpoints.begin(), traits.breakpoints.end());
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kCustom, Custom{std::move(fn)}, std::move(traits)}));
}

RadialProfile RadialProfile::mapped(std::function<double(double)> map) const {
  if (!map) throw InvalidArgument("profile map is empty");
  ProfileTraits tr = impl_->traits;
  tr.far_value = map(tr.far_value);
  return RadialProfile(std::make_shared<const Impl>(
      Impl{ProfileKind::kComposed, Composed{*this, std::move(map)},
           std::move(tr)}));
}

RadialProfile RadialProfile::divided_by_radius() const {
  if (const auto* s = std::get_if<SwirlGaussian>(&impl_->data)) {
    return gaussian_bump(0.0, s->amplitude, s->sigma);
  }
  if (const auto* c = std::get_if<Constant>(&impl_->data)) {
    if (c->value == 0.0) return constant(0.0);
  }
  ProfileTraits tr = impl_->traits;
  if (tr.far_value != 0.0) {
    tr.decay = {DecayKind::kBounded, kInf};
  }
  tr.far_value = 0.0;
  // One-sided slope at the origin; used only when r == 0.
  constexpr double kOriginStep = 1e-6;
  const RadialProfile self = *this;
  const double f0 = self(0.0);
  const double slope0 =
      (-3.0 * f0 + 4.0 * self(kOriginStep) - self(2.0 * kOriginStep)) /
      (2.0 * kOriginStep);
  return from_function(
      [self, slope0](double r) { return r > 0.0 ? self(r) / r : slope0; },
      std::move(tr));
}

double RadialProfile::operator()(double r) const { return impl_->eval(r); }

ProfileKind RadialProfile::kind() const noexcept { return impl_->kind; }
Decay RadialProfile::decay() const noexcept { return impl_->traits.decay; }
double RadialProfile::far_value() const noexcept {
  return impl_->traits.far_value;
}

double RadialProfile::support_radius() const noexcept {
  const Decay d = impl_->traits.decay;
  switch (d.kind) {
    case DecayKind::kCompact: return d.scale;
    case DecayKind::kGaussian: return kGaussianCutoff * d.scale;
    case DecayKind::kBounded: return kInf;
  }
  return kInf;
}

double RadialProfile::feature_scale() const noexcept {
  return impl_->traits.feature_scale;
}

std::span<const double> RadialProfile::breakpoints() const noexcept {
  return impl_->traits.breakpoints;
}

std::span<const double> RadialProfile::log_nodes() const noexcept {
  if (const auto* t = std::get_if<Table>(&impl_->data); t && t->logarithmic) {
    return t->x;
  }
  return {};
}

std::span<const double> RadialProfile::node_values() const noexcept {
  if (const auto* t = std::get_if<Table>(&impl_->data)) return t->f;
  return {};
}

}  // namespace lcexact
