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

// Weyl-Heisenberg machinery on L^2(Z/NZ) and the exact Egorov check.
//
//   t1 phi(Q) = e(Q/N) phi(Q),   t2 phi(Q) = phi(Q + 1)
//   T_N(n)    = e(-n1 n2 / 2N) t2^{n2} t1^{n1}
//   Op_N(f)   = sum_m f_m T_N(m)   for f(z) = sum_m f_m e(z . m)
//
// Egorov: U_N(A)^{-1} Op_N(f) U_N(A) = Op_N(f o A), where f o A moves the
// coefficient of mode m to mode A^T m.

#pragma once

#include <map>
#include <vector>

#include "catmap/matrix.hpp"
#include "catmap/propagator.hpp"

namespace catmap {

struct WeylIndex {
    Int n1 = 0;
    Int n2 = 0;

    friend bool operator==(const WeylIndex &, const WeylIndex &) = default;
    friend bool operator<(const WeylIndex &x, const WeylIndex &y) {
        return x.n1 < y.n1 || (x.n1 == y.n1 && x.n2 < y.n2);
    }
    friend WeylIndex operator+(const WeylIndex &x, const WeylIndex &y) {
        return {x.n1 + y.n1, x.n2 + y.n2};
    }
};

std::string to_string(const WeylIndex &m);

/// omega(m, n) = m1 n2 - m2 n1
Int symplectic_form(const WeylIndex &m, const WeylIndex &n);

/// delta_nu: sqrt(N) at nu, zero elsewhere. Throws IndexOutOfRange.
Vector delta_basis(std::int64_t nu, HilbertDim n);

/// <x, y> = (1/N) sum conj(x_Q) y_Q, under which the delta_nu are orthonormal.
Complex inner_product(std::span<const Complex> x, std::span<const Complex> y);

ComplexMatrix translation_t1(HilbertDim n);
ComplexMatrix translation_t2(HilbertDim n);

/// T_N(n). Entry (Q, Q + n2 mod N) = e(n1 (2Q + n2) / 2N).
ComplexMatrix weyl_op(const WeylIndex &m, HilbertDim n);

/// Trigonometric polynomial on the torus: finitely many Fourier coefficients.
struct Observable {
    std::map<WeylIndex, Complex> coefficients;

    static Observable constant(Complex value);
    static Observable mode(const WeylIndex &m, Complex coefficient = 1.0);

    /// f_{-m} = conj(f_m) within tol for every m.
    bool is_real(double tol = 1e-12) const;
};

/// Op_N(f).
ComplexMatrix quantize(const Observable &f, HilbertDim n);

/// A^T m
WeylIndex transport(const WeylIndex &m, const IntMatrix2 &a);

/// f o A: the coefficient of m moves to A^T m.
Observable compose_classical(const Observable &f, const IntMatrix2 &a);

struct ModeError {
    WeylIndex mode;
    double error = 0.0;
};

struct EgorovReport {
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<ModeError> modes;  // per-mode errors, ordered by mode
};

/// ||U^{-1} Op(f) U - Op(f o A)||_max against 1e-8 * N * tolerance_scale.
EgorovReport verify_egorov(const ThetaMatrix &a, HilbertDim n, const Observable &f,
                           double tolerance_scale = 1.0);

/// Single Weyl modes m in [0, N)^2 (a complete basis of operators, so this
/// certifies every observable by linearity). Modes are processed in parallel.
EgorovReport verify_egorov_all_modes(const ThetaMatrix &a, HilbertDim n, double tolerance_scale = 1.0);

/// One mode of the Egorov check, computed without forming Op(f) densely:
/// T(m) is monomial, so T(m) U costs O(N^2).
double egorov_mode_error(const ComplexMatrix &u, const IntMatrix2 &a, const WeylIndex &m, HilbertDim n);

/// Commutator of two single modes against their Poisson bracket.
///   raw:      ||(N/2pi)[T(m), T(n)] - Op({f,g})||_max with {f,g} = 4 pi^2 omega e(z.(m+n))
///   relative: ||(N/2pi)[T(m), T(n)] - kappa Op({f,g})||_max / ||kappa Op({f,g})||_max,
///             kappa = -i / (4 pi^2); zero when omega = 0.
struct SemiclassicalPoint {
    std::int64_t n = 0;
    double raw_deviation = 0.0;
    double relative_deviation = 0.0;
};

SemiclassicalPoint semiclassical_deviation(const WeylIndex &m, const WeylIndex &k, HilbertDim n);

}  // namespace catmap
