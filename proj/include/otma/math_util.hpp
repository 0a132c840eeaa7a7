// SPDX-License-Identifier: Apache-2.0
//
// otma - oversampled time-modulated array simulation library
// Copyright (C) 2026 otma developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>

namespace otma
{

using cdouble = std::complex<double>;

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double two_pi = 2.0 * pi;

// Unnormalized cardinal sine, sinc(x) = sin(x) / x with sinc(0) = 1.
inline double sinc(double x)
{
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Wrap an angle to the half-open interval (-pi, pi].
inline double wrap_phase(double x)
{
    double y = std::remainder(x, two_pi);
    if (y <= -pi)
        y += two_pi;
    return y;
}

inline double deg2rad(double deg) { return deg * (pi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / pi); }

// Unit phasor e^{j*phase}.
inline cdouble cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

// Euclidean (non-negative) remainder of k modulo m, m > 0.
inline long long mod_floor(long long k, long long m)
{
    long long r = k % m;
    return r < 0 ? r + m : r;
}

// Power ratio in decibel, 10*log10(x).
inline double pow2db(double x) { return 10.0 * std::log10(x); }

} // namespace otma
