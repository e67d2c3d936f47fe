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

#include "catmap/gauss.hpp"

#include <cmath>

namespace catmap {

bool is_nonvanishing(const GaussParams &p) {
    return nt::gcd(p.alpha, p.beta) == 1 && nt::is_even(Int(p.alpha * p.beta + p.gamma));
}

namespace {

template <nt::Integer I>
Complex direct_sum(const I &alpha, const I &gamma, const I &den) {
    Complex sum = 0.0;
    for (I k = 0; k < den; ++k) {
        sum += unit_phase(I(nt::mul_mod(nt::mul_mod(alpha, k, den), k, den) + nt::mul_mod(gamma, k, den)), den);
    }
    return sum;
}

}  // namespace

Complex gauss_direct(const GaussParams &p) {
    if (p.beta == 0) throw Error(ErrorCode::Vanishing, "beta = 0");
    const Int abs_beta = nt::abs(p.beta);
    // e(x / (2 beta)) = e(sign(beta) x / (2 |beta|)), summed over k mod 2|beta|
    const Int den = 2 * abs_beta;
    const Int alpha = nt::floor_mod(Int(p.alpha * nt::sign(p.beta)), den);
    const Int gamma = nt::floor_mod(Int(p.gamma * nt::sign(p.beta)), den);
    Complex sum = den < (Int(1) << 61)
                      ? direct_sum<std::int64_t>(static_cast<std::int64_t>(alpha),
                                                 static_cast<std::int64_t>(gamma),
                                                 static_cast<std::int64_t>(den))
                      : direct_sum<Int>(alpha, gamma, den);
    return sum / (2.0 * std::sqrt(abs_beta.convert_to<double>()));
}

GaussClosedForm::GaussClosedForm(const Int &alpha, const Int &beta) {
    if (beta == 0 || nt::gcd(alpha, beta) != 1) {
        throw Error(ErrorCode::Vanishing, "gcd(" + alpha.str() + "," + beta.str() + ") != 1");
    }
    const Int abs_beta = nt::abs(beta);
    const bool all_odd = !nt::is_even(alpha) && !nt::is_even(beta);
    init(alpha, beta, nt::inverse_mod(Int(all_odd ? 4 * alpha : alpha), abs_beta));
}

GaussClosedForm::GaussClosedForm(const Int &alpha, const Int &beta, const Int &inverse) {
    if (beta == 0 || nt::gcd(alpha, beta) != 1) {
        throw Error(ErrorCode::Vanishing, "gcd(" + alpha.str() + "," + beta.str() + ") != 1");
    }
    init(alpha, beta, inverse);
}

void GaussClosedForm::init(const Int &alpha, const Int &beta, const Int &inverse) {
    const Int abs_alpha = nt::abs(alpha);
    const Int abs_beta = nt::abs(beta);
    const int s = nt::sign(alpha) * nt::sign(beta);
    modulus_ = 2 * abs_beta;

    // Eighth-root exponents below are taken mod 8.
    Int coeff;
    if (nt::is_even(alpha)) {
        // alpha even, beta odd, gamma even
        gamma_odd_ = false;
        prefactor_ = double(nt::jacobi(abs_alpha, abs_beta)) *
                     eighth_root(static_cast<int>(nt::floor_mod(Int(-s * (abs_beta - 1)), Int(8))));
        coeff = alpha * inverse * inverse;
    } else if (nt::is_even(beta)) {
        // alpha odd, beta even, gamma even
        gamma_odd_ = false;
        prefactor_ = double(nt::jacobi(abs_beta, abs_alpha)) *
                     eighth_root(static_cast<int>(nt::floor_mod(Int(s * abs_alpha), Int(8))));
        coeff = alpha * inverse * inverse;
    } else {
        // all odd: e(-2 alpha inv^2 gamma^2 / beta) = e(-4 alpha inv^2 gamma^2 / (2 beta))
        gamma_odd_ = true;
        prefactor_ = double(nt::jacobi(abs_alpha, abs_beta)) *
                     eighth_root(static_cast<int>(nt::floor_mod(Int(-s * (abs_beta - 1)), Int(8))));
        coeff = 4 * alpha * inverse * inverse;
    }
    // e(-coeff s^2 / (2 beta)) = e(-sign(beta) coeff s^2 / (2 |beta|))
    coefficient_ = nt::floor_mod(Int(-nt::sign(beta) * coeff), modulus_);
}

Complex GaussClosedForm::operator()(const Int &gamma) const {
    if (nt::is_even(gamma) == gamma_odd_) return 0.0;
    Int s = gamma_odd_ ? gamma : Int(gamma / 2);
    s = nt::floor_mod(s, modulus_);
    return prefactor_ * unit_phase(Int(coefficient_ * s % modulus_ * s), modulus_);
}

namespace {

void check_branch(const GaussParams &p) {
    if (p.beta == 0 || nt::gcd(p.alpha, p.beta) != 1) {
        throw Error(ErrorCode::Vanishing,
                    "gcd(" + p.alpha.str() + "," + p.beta.str() + ") != 1");
    }
    const bool ae = nt::is_even(p.alpha), be = nt::is_even(p.beta), ge = nt::is_even(p.gamma);
    const bool ok = (ae && !be && ge) || (!ae && be && ge) || (!ae && !be && !ge);
    if (!ok) {
        throw Error(ErrorCode::UnsupportedParity, "(" + p.alpha.str() + "," + p.beta.str() + "," +
                                                      p.gamma.str() + ")");
    }
}

}  // namespace

Complex gauss_closed(const GaussParams &p) {
    check_branch(p);
    return GaussClosedForm(p.alpha, p.beta)(p.gamma);
}

Complex gauss_closed_with_inverse(const GaussParams &p, const Int &inverse) {
    check_branch(p);
    return GaussClosedForm(p.alpha, p.beta, inverse)(p.gamma);
}

}  // namespace catmap
