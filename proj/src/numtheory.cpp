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

#include "catmap/numtheory.hpp"

namespace catmap {

Residue::Residue(Int v, Int m) : modulus(std::move(m)) {
    if (modulus < 1) throw Error(ErrorCode::NonPositiveModulus, "residue modulus " + modulus.str());
    value = nt::floor_mod(v, modulus);
}

Int gcd(const Int &a, const Int &b) { return nt::gcd(a, b); }

Residue mod_inverse(const Int &p, const Int &q) { return Residue(nt::inverse_mod(p, q), q); }

Residue mod_inverse_euler(const Int &p, const Int &q) {
    if (q < 1) throw Error(ErrorCode::NonPositiveModulus, "modulus " + q.str());
    if (nt::gcd(p, q) != 1) throw Error(ErrorCode::NotCoprime, p.str() + " mod " + q.str());
    return Residue(nt::pow_mod(p, Int(euler_phi(q) - 1), q), q);
}

Int euler_phi(const Int &q) {
    if (q < 1) throw Error(ErrorCode::NonPositiveModulus, "euler_phi argument " + q.str());
    Int n = q;
    Int result = q;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int sign(const Int &x) { return nt::sign(x); }

int jacobi(const Int &q, const Int &r) { return nt::jacobi(q, r); }

Residue crt_pair(const Residue &r1, const Residue &r2) {
    auto [g, u, v] = nt::extended_gcd(r1.modulus, r2.modulus);
    if (g != 1) {
        throw Error(ErrorCode::ModuliNotCoprime,
                    r1.modulus.str() + " and " + r2.modulus.str());
    }
    // u*m1 + v*m2 = 1, so x = v1*v*m2 + v2*u*m1 hits both residues.
    Int m = r1.modulus * r2.modulus;
    return Residue(r1.value * v * r2.modulus + r2.value * u * r1.modulus, m);
}

}  // namespace catmap
