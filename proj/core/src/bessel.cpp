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

#include "lcexact/bessel.hpp"

#include <cmath>

#include "lcexact/error.hpp"

namespace lcexact {
namespace {

// Chebyshev coefficients of sqrt(x) e^{-x} I_n(x) - 0.375 in 16/x - 1 for
// x > 8 (SLATEC FNLIB ai02cs / ai12cs, truncated where terms drop below
// 1e-19).
constexpr double kAi02[] = {
    0.0544904110141088316078960962268,
    0.003369116478255694089897856629799,
    6.889758346916823984262639143011e-5,
    2.891370520834756482966924023232e-6,
    2.048918589469063741827605340931e-7,
    2.266668990498178064593277431361e-8,
    3.396232025708386345150843969523e-9,
    4.940602388224969589104824497835e-10,
    1.188914710784643834240845251963e-11,
    -3.149916527963241364538648629619e-11,
    -1.321581184044771311875407399267e-11,
    -1.794178531506806117779435740269e-12,
    7.180124451383666233671064293469e-13,
    3.852778382742142701140898017776e-13,
    1.540086217521409826913258233397e-14,
    -4.150569347287222086626899720156e-14,
    -9.554846698828307648702144943125e-15,
    3.811680669352622420746055355118e-15,
    1.772560133056526383604932666758e-15,
    -3.425485619677219134619247903282e-16,
    -2.827623980516583484942055937594e-16,
    3.461222867697461093097062508134e-17,
    4.465621420296759999010420542843e-17,
    -4.830504485944182071255254037954e-18,
    -7.233180487874753954562272409245e-18,
    9.92147541217369859888046093981e-19,
    1.193650890845982085504399499242e-18,
    -2.488709837150807235720544916602e-19,
    -1.938426454160905928984697811326e-19,
    6.444656697373443868783019493949e-20,
};

constexpr double kAi12[] = {
    0.02857623501828012047449845948469,
    -0.009761097491361468407765164457302,
    -1.105889387626237162912569212775e-4,
    -3.882564808877690393456544776274e-6,
    -2.512236237870208925294520022121e-7,
    -2.631468846889519506837052365232e-8,
    -3.835380385964237022045006787968e-9,
    -5.589743462196583806868112522229e-10,
    -1.897495812350541234498925033238e-11,
    3.252603583015488238555080679949e-11,
    1.412580743661378133163366332846e-11,
    2.03562854414708950722452613684e-12,
    -7.198551776245908512092589890446e-13,
    -4.083551111092197318228499639691e-13,
    -2.101541842772664313019845727462e-14,
    4.272440016711951354297788336997e-14,
    1.042027698412880276417414499948e-14,
    -3.814403072437007804767072535396e-15,
    -1.880354775510782448512734533963e-15,
    3.308202310920928282731903352405e-16,
    2.962628997645950139068546542052e-16,
    -3.209525921993423958778373532887e-17,
    -4.650305368489358325571282818979e-17,
    4.414348323071707949946113759641e-18,
    7.517296310842104805425458080295e-18,
    -9.314178867326883375684847845157e-19,
    -1.242193275194890956116784488697e-18,
    2.414276719454848469005153902176e-19,
    2.026944384053285178971922860692e-19,
    -6.394267188269097787043919886811e-20,
};

template <std::size_t N>
double chebyshev_series(double x, const double (&cs)[N]) {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  const double twox = 2.0 * x;
  for (std::size_t i = N; i-- > 0;) {
    b2 = b1;
    b1 = b0;
    b0 = twox * b1 - b2 + cs[i];
  }
  return 0.5 * (b0 - b2);
}

void check_argument(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw InvalidArgument("scaled Bessel argument must be finite and >= 0");
  }
}

// sum_k (x^2/4)^k / (k! (k+nu)!) for nu in {0, 1}; all terms positive.
double power_series(double x, int nu) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (k + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double bessel_i0e(double x) {
  check_argument(x);
  if (x < kBesselSeriesCutoff) return std::exp(-x) * power_series(x, 0);
  return (chebyshev_series(16.0 / x - 1.0, kAi02) + 0.375) / std::sqrt(x);
}

double bessel_i1e(double x) {
  check_argument(x);
  if (x < kBesselSeriesCutoff) return std::exp(-x) * 0.5 * x * power_series(x, 1);
  return (chebyshev_series(16.0 / x - 1.0, kAi12) + 0.375) / std::sqrt(x);
}

double bessel_i1e_over_x(double x) {
  check_argument(x);
  if (x < kBesselSeriesCutoff) return std::exp(-x) * 0.5 * power_series(x, 1);
  return (chebyshev_series(16.0 / x - 1.0, kAi12) + 0.375) / (x * std::sqrt(x));
}

}  // namespace lcexact
