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

#include "catmap/weyl.hpp"

#include <cmath>
#include <numbers>

namespace catmap {

std::string to_string(const WeylIndex &m) { return "(" + m.n1.str() + "," + m.n2.str() + ")"; }

Int symplectic_form(const WeylIndex &m, const WeylIndex &n) { return m.n1 * n.n2 - m.n2 * n.n1; }

Vector delta_basis(std::int64_t nu, HilbertDim n) {
    if (nu < 0 || nu >= n.value()) {
        throw Error(ErrorCode::IndexOutOfRange, "nu = " + std::to_string(nu) + ", N = " + std::to_string(n.value()));
    }
    Vector v(n.size());
    v[static_cast<std::size_t>(nu)] = std::sqrt(double(n.value()));
    return v;
}

Complex inner_product(std::span<const Complex> x, std::span<const Complex> y) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc / double(x.size());
}

ComplexMatrix translation_t1(HilbertDim n) { return weyl_op({1, 0}, n); }

ComplexMatrix translation_t2(HilbertDim n) { return weyl_op({0, 1}, n); }

namespace {

struct ReducedIndex {
    std::int64_t n1;  // mod 2N
    std::int64_t n2;  // mod 2N
};

ReducedIndex reduce(const WeylIndex &m, std::int64_t n) {
    const Int den = 2 * n;
    return {static_cast<std::int64_t>(nt::floor_mod(m.n1, den)),
            static_cast<std::int64_t>(nt::floor_mod(m.n2, den))};
}

// T(m) as (column, phase) per row.
template <class F>
void for_each_weyl_entry(const ReducedIndex &m, std::int64_t n, F &&f) {
    const std::int64_t den = 2 * n;
    for (std::int64_t q = 0; q < n; ++q) {
        const std::int64_t col = (q + m.n2) % n;
        f(static_cast<std::size_t>(q), static_cast<std::size_t>(col),
          unit_phase(m.n1 * ((2 * q + m.n2) % den) % den, den));
    }
}

}  // namespace

ComplexMatrix weyl_op(const WeylIndex &m, HilbertDim n) {
    ComplexMatrix t(n.size());
    for_each_weyl_entry(reduce(m, n.value()), n.value(),
                        [&](std::size_t r, std::size_t c, Complex v) { t(r, c) = v; });
    return t;
}

Observable Observable::constant(Complex value) { return mode({0, 0}, value); }

Observable Observable::mode(const WeylIndex &m, Complex coefficient) {
    Observable f;
    f.coefficients[m] = coefficient;
    return f;
}

bool Observable::is_real(double tol) const {
    for (const auto &[m, c] : coefficients) {
        auto it = coefficients.find(WeylIndex{-m.n1, -m.n2});
        const Complex partner = it == coefficients.end() ? Complex(0.0) : it->second;
        if (std::abs(partner - std::conj(c)) > tol) return false;
    }
    return true;
}

ComplexMatrix quantize(const Observable &f, HilbertDim n) {
    ComplexMatrix op(n.size());
    for (const auto &[m, c] : f.coefficients) {
        for_each_weyl_entry(reduce(m, n.value()), n.value(),
                            [&](std::size_t r, std::size_t col, Complex v) { op(r, col) += c * v; });
    }
    return op;
}

WeylIndex transport(const WeylIndex &m, const IntMatrix2 &a) {
    return {a.a * m.n1 + a.c * m.n2, a.b * m.n1 + a.d * m.n2};
}

Observable compose_classical(const Observable &f, const IntMatrix2 &a) {
    Observable out;
    for (const auto &[m, c] : f.coefficients) out.coefficients[transport(m, a)] += c;
    return out;
}

EgorovReport verify_egorov(const ThetaMatrix &a, HilbertDim n, const Observable &f, double tolerance_scale) {
    const ComplexMatrix u = build(a, n);
    const ComplexMatrix lhs = kernels::parallel::adjoint_multiply(u, quantize(f, n) * u);
    const ComplexMatrix rhs = quantize(compose_classical(f, a.matrix()), n);
    EgorovReport r;
    r.max_error = max_abs_diff(lhs, rhs);
    r.tolerance = 1e-8 * double(n.value()) * tolerance_scale;
    r.pass = r.max_error < r.tolerance;
    return r;
}

double egorov_mode_error(const ComplexMatrix &u, const IntMatrix2 &a, const WeylIndex &m, HilbertDim n) {
    const std::size_t size = n.size();
    ComplexMatrix tu(size);
    for_each_weyl_entry(reduce(m, n.value()), n.value(), [&](std::size_t r, std::size_t c, Complex v) {
        for (std::size_t j = 0; j < size; ++j) tu(r, j) = v * u(c, j);
    });
    const ComplexMatrix lhs = kernels::serial::adjoint_multiply(u, tu);
    return kernels::serial::max_abs_diff(lhs, weyl_op(transport(m, a), n));
}

EgorovReport verify_egorov_all_modes(const ThetaMatrix &a, HilbertDim n, double tolerance_scale) {
    const ComplexMatrix u = build(a, n);
    const std::int64_t count = n.value() * n.value();
    EgorovReport r;
    r.modes.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) if (n.value() >= 8)
    for (std::int64_t idx = 0; idx < count; ++idx) {
        const WeylIndex m{idx / n.value(), idx % n.value()};
        r.modes[static_cast<std::size_t>(idx)] = {m, egorov_mode_error(u, a.matrix(), m, n)};
    }
    for (const auto &me : r.modes) r.max_error = std::max(r.max_error, me.error);
    r.tolerance = 1e-8 * double(n.value()) * tolerance_scale;
    r.pass = r.max_error < r.tolerance;
    return r;
}

SemiclassicalPoint semiclassical_deviation(const WeylIndex &m, const WeylIndex &k, HilbertDim n) {
    using std::numbers::pi;
    const double omega = symplectic_form(m, k).convert_to<double>();
    const ComplexMatrix tm = weyl_op(m, n);
    const ComplexMatrix tk = weyl_op(k, n);
    const ComplexMatrix lhs = (double(n.value()) / (2 * pi)) * commutator(tm, tk);
    const ComplexMatrix sum_mode = weyl_op(m + k, n);
    SemiclassicalPoint p;
    p.n = n.value();
    p.raw_deviation = max_abs_diff(lhs, Complex(4 * pi * pi * omega) * sum_mode);
    if (omega != 0.0) {
        const ComplexMatrix target = Complex(0, -omega) * sum_mode;
        p.relative_deviation = max_abs_diff(lhs, target) / max_abs(target);
    }
    return p;
}

}  // namespace catmap
