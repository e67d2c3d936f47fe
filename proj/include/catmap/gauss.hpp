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

// Normalized quadratic Gauss sums
//
//   G(alpha, beta, gamma) = |beta|^{-1/2} sum_{k mod |beta|} e((alpha k^2 + gamma k) / (2 beta))
//
// by direct summation and by the three-branch closed form.

#pragma once

#include "catmap/phase.hpp"

namespace catmap {

struct GaussParams {
    Int alpha;
    Int beta;  // nonzero
    Int gamma;
};

/// gcd(alpha, beta) = 1 and alpha*beta + gamma even.
bool is_nonvanishing(const GaussParams &p);

/// Direct summation. The summand is summed over k mod 2|beta| and halved,
/// which equals the sum over k mod |beta| whenever that sum is well defined
/// (alpha*beta + gamma even) and is exactly zero otherwise.
Complex gauss_direct(const GaussParams &p);

/// Closed form. Throws Vanishing when gcd(alpha, beta) != 1 and
/// UnsupportedParity when the parities of (alpha, beta, gamma) match none of
/// (even, odd, even), (odd, even, even), (odd, odd, odd).
Complex gauss_closed(const GaussParams &p);

/// Closed form with a caller-chosen representative of the modular inverse:
/// `inverse` must satisfy alpha * inverse = 1 mod |beta| (gamma even) or
/// 4 alpha * inverse = 1 mod |beta| (gamma odd). Any representative gives
/// the same value.
Complex gauss_closed_with_inverse(const GaussParams &p, const Int &inverse);

/// The closed form for fixed (alpha, beta) as a function of gamma:
///
///   G = prefactor() * e(coefficient() * s^2 / modulus())
///
/// with s = gamma / 2 for even-gamma branches and s = gamma for the all-odd
/// branch. Gammas of the wrong parity give zero. Used by the propagator to
/// evaluate N^2 entries without redoing the Jacobi symbols.
class GaussClosedForm {
  public:
    /// Throws Vanishing when gcd(alpha, beta) != 1 or beta == 0.
    GaussClosedForm(const Int &alpha, const Int &beta);
    GaussClosedForm(const Int &alpha, const Int &beta, const Int &inverse);

    bool gamma_odd() const noexcept { return gamma_odd_; }
    const Complex &prefactor() const noexcept { return prefactor_; }
    /// Residue in [0, modulus).
    const Int &coefficient() const noexcept { return coefficient_; }
    /// 2 |beta|
    const Int &modulus() const noexcept { return modulus_; }

    Complex operator()(const Int &gamma) const;

  private:
    void init(const Int &alpha, const Int &beta, const Int &inverse);

    bool gamma_odd_ = false;
    Complex prefactor_;
    Int coefficient_;
    Int modulus_;
};

}  // namespace catmap
