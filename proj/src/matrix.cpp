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

#include "catmap/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace catmap {

namespace {

// Below this size the fork/join cost dominates the work.
constexpr std::size_t kParallelThreshold = 24;

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &x : data_) x *= scalar;
    return *this;
}

namespace kernels {

namespace serial {

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim();
    assert(b.dim() == n);
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix adjoint_multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim();
    assert(b.dim() == n);
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const Complex aki = std::conj(a(k, i));
            if (aki == Complex(0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aki * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    assert(a.dim() == b.dim());
    double worst = 0.0;
    auto av = a.values();
    auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) worst = std::max(worst, std::abs(av[i] - bv[i]));
    return worst;
}

Vector apply(const ComplexMatrix &a, std::span<const Complex> x) {
    const std::size_t n = a.dim();
    assert(x.size() == n);
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace serial

namespace parallel {

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim();
    assert(b.dim() == n);
    ComplexMatrix out(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::size_t i = 0; i < n; ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0)) continue;
            auto b_row = b.row(k);
            for (std::size_t j = 0; j < n; ++j) out_row[j] += aik * b_row[j];
        }
    }
    return out;
}

ComplexMatrix adjoint_multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim();
    assert(b.dim() == n);
    ComplexMatrix out(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::size_t i = 0; i < n; ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aki = std::conj(a(k, i));
            if (aki == Complex(0)) continue;
            auto b_row = b.row(k);
            for (std::size_t j = 0; j < n; ++j) out_row[j] += aki * b_row[j];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    assert(a.dim() == b.dim());
    auto av = a.values();
    auto bv = b.values();
    const std::size_t size = av.size();
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (a.dim() >= kParallelThreshold)
    for (std::size_t i = 0; i < size; ++i) worst = std::max(worst, std::abs(av[i] - bv[i]));
    return worst;
}

Vector apply(const ComplexMatrix &a, std::span<const Complex> x) {
    const std::size_t n = a.dim();
    assert(x.size() == n);
    Vector y(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        auto a_row = a.row(i);
        for (std::size_t j = 0; j < n; ++j) acc += a_row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

}  // namespace parallel

}  // namespace kernels

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return kernels::parallel::multiply(a, b);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

Vector operator*(const ComplexMatrix &a, std::span<const Complex> x) {
    return kernels::parallel::apply(a, x);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return kernels::parallel::max_abs_diff(a, b);
}

double max_abs(const ComplexMatrix &a) {
    double worst = 0.0;
    for (const auto &x : a.values()) worst = std::max(worst, std::abs(x));
    return worst;
}

double unitarity_error(const ComplexMatrix &u) {
    return max_abs_diff(kernels::parallel::adjoint_multiply(u, u), ComplexMatrix::identity(u.dim()));
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

}  // namespace catmap
