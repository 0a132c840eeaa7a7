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

#include "otma/dft.hpp"

#include <utility>

namespace otma
{

static bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey; sign = -1 forward, +1 inverse.
static void fft_pow2(std::vector<cdouble> &a, double sign)
{
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; i++)
    {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1)
    {
        double ang = sign * two_pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < len / 2; k++)
            {
                cdouble w = cis(ang * static_cast<double>(k));
                cdouble u = a[i + k];
                cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
    }
}

static std::vector<cdouble> dft_direct(const std::vector<cdouble> &x, double sign)
{
    const std::size_t n = x.size();
    std::vector<cdouble> out(n);
    for (std::size_t b = 0; b < n; b++)
    {
        cdouble acc = 0.0;
        for (std::size_t t = 0; t < n; t++)
        {
            // Reduce b*t mod n before forming the angle to keep precision.
            std::size_t r = (b * t) % n;
            acc += x[t] * cis(sign * two_pi * static_cast<double>(r) / static_cast<double>(n));
        }
        out[b] = acc;
    }
    return out;
}

std::vector<cdouble> dft(const std::vector<cdouble> &x)
{
    if (x.empty())
        return {};
    if (is_pow2(x.size()))
    {
        std::vector<cdouble> a = x;
        fft_pow2(a, -1.0);
        return a;
    }
    return dft_direct(x, -1.0);
}

std::vector<cdouble> idft(const std::vector<cdouble> &x)
{
    if (x.empty())
        return {};
    std::vector<cdouble> a;
    if (is_pow2(x.size()))
    {
        a = x;
        fft_pow2(a, 1.0);
    }
    else
        a = dft_direct(x, 1.0);
    const double inv = 1.0 / static_cast<double>(a.size());
    for (cdouble &v : a)
        v *= inv;
    return a;
}

} // namespace otma
