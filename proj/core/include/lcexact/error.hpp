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

#ifndef LCEXACT_ERROR_HPP
#define LCEXACT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcexact {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The validity constraint beta * sin^2(psi) > 1 (plus margin) failed.
class DomainViolation : public Error {
 public:
  DomainViolation(const std::string& what, double psi, double margin)
      : Error(what), psi_(psi), margin_(margin) {}

  /// Angle at which the constraint failed.
  double psi() const noexcept { return psi_; }
  /// beta * sin^2(psi) - 1 at that angle.
  double margin() const noexcept { return margin_; }

 private:
  double psi_;
  double margin_;
};

/// beta * sin^2(delta1) == 1, so the transformed range collapses (delta2 = 0).
class DegenerateMargin : public DomainViolation {
 public:
  using DomainViolation::DomainViolation;
};

/// Quadrature or Newton iteration failed to reach its tolerance.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}

  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Requested quantity is undefined for the given data (e.g. no far field).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Invalid solver configuration (e.g. explicit step violating CFL).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A field invariant (unit norm, angle range, ...) was violated at a node.
class InvariantBreach : public Error {
 public:
  InvariantBreach(const std::string& monitor, std::size_t node,
                  const std::string& what)
      : Error(what), monitor_(monitor), node_(node) {}

  const std::string& monitor() const noexcept { return monitor_; }
  std::size_t node() const noexcept { return node_; }

 private:
  std::string monitor_;
  std::size_t node_;
};

}  // namespace lcexact

#endif  // LCEXACT_ERROR_HPP
