// Copyright 2026 The catmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catmap/phase.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace catmap {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2;

const std::array<Complex, 8> kEighthRoots = {
    Complex(1, 0),          Complex(kHalfSqrt2, kHalfSqrt2),   Complex(0, 1),
    Complex(-kHalfSqrt2, kHalfSqrt2), Complex(-1, 0), Complex(-kHalfSqrt2, -kHalfSqrt2),
    Complex(0, -1),         Complex(kHalfSqrt2, -kHalfSqrt2),
};

// x in [0, 1)
Complex phase_of_fraction(long double x) {
    if (x > 0.5L) x -= 1.0L;
    long double angle = 2.0L * std::numbers::pi_v<long double> * x;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace

Complex eighth_root(int k) { return kEighthRoots[static_cast<std::size_t>(((k % 8) + 8) % 8)]; }

Complex unit_phase(std::int64_t num, std::int64_t den) {
    std::int64_t r = nt::floor_mod(num, den);
    __int128 r8 = static_cast<__int128>(r) * 8;
    if (r8 % den == 0) return kEighthRoots[static_cast<std::size_t>(r8 / den)];
    return phase_of_fraction(static_cast<long double>(r) / static_cast<long double>(den));
}

Complex unit_phase(const Int &num, const Int &den) {
    if (den <= INT64_MAX && num <= INT64_MAX && num >= INT64_MIN) {
        return unit_phase(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }
    Int r = nt::floor_mod(num, den);
    Int r8 = r * 8;
    if (r8 % den == 0) return kEighthRoots[static_cast<std::size_t>(r8 / den)];
    // Scale to 64 fractional bits before converting; avoids overflow of the
    // long double exponent for astronomically large denominators.
    Int scaled = (r << 64) / den;
    return phase_of_fraction(std::ldexp(scaled.convert_to<long double>(), -64));
}

}  // namespace catmap
