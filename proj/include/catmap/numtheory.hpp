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

// Exact integer arithmetic: gcd, modular inverses, Euler's phi, the Jacobi
// symbol and the Chinese remainder theorem.
//
// The kernels are templates over the integer type so the same code serves the
// arbitrary precision `Int` used at the API boundary and the `std::int64_t`
// fast path used inside per-entry propagator loops.

#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "catmap/error.hpp"

namespace catmap {

using Int = boost::multiprecision::cpp_int;

namespace nt {

template <class I>
concept Integer = std::same_as<I, std::int64_t> || std::same_as<I, Int>;

inline std::string str(const Int &x) { return x.str(); }
inline std::string str(std::int64_t x) { return std::to_string(x); }

template <Integer I>
I abs(const I &x) {
    return x < 0 ? I(-x) : x;
}

/// Sign function with sign(0) = 0.
template <Integer I>
int sign(const I &x) {
    return (x > 0) - (x < 0);
}

template <Integer I>
bool is_even(const I &x) {
    return x % 2 == 0;
}

/// Representative of x in [0, m). Requires m > 0.
template <Integer I>
I floor_mod(const I &x, const I &m) {
    I r = x % m;
    if (r < 0) r += m;
    return r;
}

/// Always nonnegative; gcd(0, 0) = 0.
template <Integer I>
I gcd(I a, I b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        I t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// Bezout coefficients: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
template <Integer I>
std::tuple<I, I, I> extended_gcd(const I &a, const I &b) {
    I old_r = a, r = b;
    I old_s = 1, s = 0;
    I old_t = 0, t = 1;
    while (r != 0) {
        I q = old_r / r;
        I tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

/// Inverse of p modulo q >= 1 via extended Euclid, canonical in [0, q).
template <Integer I>
I inverse_mod(const I &p, const I &q) {
    if (q < 1) throw Error(ErrorCode::NonPositiveModulus, "modulus " + str(q));
    auto [g, x, y] = extended_gcd(floor_mod(p, q), q);
    (void)y;
    if (g != 1) throw Error(ErrorCode::NotCoprime, str(p) + " mod " + str(q));
    return floor_mod(x, q);
}

/// (a * b) mod m for residues in [0, m) with m < 2^62.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline Int mul_mod(const Int &a, const Int &b, const Int &m) { return (a * b) % m; }

template <Integer I>
I pow_mod(I base, I exponent, const I &m) {
    if (m == 1) return 0;
    I result = 1;
    base = floor_mod(base, m);
    while (exponent > 0) {
        if (exponent % 2 == 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent /= 2;
    }
    return result;
}

inline unsigned trailing_zeros(std::int64_t x) {
    return static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(x)));
}

inline unsigned trailing_zeros(const Int &x) { return boost::multiprecision::lsb(x); }

/// Jacobi symbol (q/r) for odd r >= 1 by binary reciprocity; (q/1) = 1.
template <Integer I>
int jacobi(I q, I r) {
    if (r < 1) throw Error(ErrorCode::NonPositiveModulus, "jacobi modulus " + str(r));
    if (is_even(r)) throw Error(ErrorCode::EvenModulus, "jacobi modulus " + str(r));
    q = floor_mod(q, r);
    int t = 1;
    while (q != 0) {
        unsigned z = trailing_zeros(q);
        q >>= z;
        if (z % 2 == 1) {
            int r8 = static_cast<int>(r % 8);
            if (r8 == 3 || r8 == 5) t = -t;
        }
        // q and r both odd here
        if (q % 4 == 3 && r % 4 == 3) t = -t;
        I rem = r % q;
        r = std::move(q);
        q = std::move(rem);
    }
    return r == 1 ? t : 0;
}

}  // namespace nt

/// Congruence class value mod modulus, 0 <= value < modulus.
struct Residue {
    Int value;
    Int modulus;

    Residue(Int v, Int m);

    friend bool operator==(const Residue &, const Residue &) = default;
};

Int gcd(const Int &a, const Int &b);

/// Extended Euclid route. Throws NotCoprime.
Residue mod_inverse(const Int &p, const Int &q);

/// Euler-Fermat route p^(phi(q)-1) mod q; same contract as mod_inverse.
Residue mod_inverse_euler(const Int &p, const Int &q);

/// Number of 1 <= k <= q coprime to q, via trial factorization.
Int euler_phi(const Int &q);

int sign(const Int &x);

int jacobi(const Int &q, const Int &r);

/// Unique residue modulo m1*m2 agreeing with both inputs. Throws ModuliNotCoprime.
Residue crt_pair(const Residue &r1, const Residue &r2);

}  // namespace catmap
