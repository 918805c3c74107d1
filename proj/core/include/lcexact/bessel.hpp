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

#ifndef LCEXACT_BESSEL_HPP
#define LCEXACT_BESSEL_HPP

namespace lcexact {

/// Below this argument the scaled Bessel functions use their power series;
/// at and above it a Chebyshev expansion in 16/x - 1.
inline constexpr double kBesselSeriesCutoff = 8.0;

/// exp(-x) I0(x) for x >= 0, relative error below 1e-12.
double bessel_i0e(double x);

/// exp(-x) I1(x) for x >= 0.
double bessel_i1e(double x);

/// exp(-x) I1(x) / x, continuous at 0 where it equals 1/2.
double bessel_i1e_over_x(double x);

}  // namespace lcexact

#endif  // LCEXACT_BESSEL_HPP
