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

// Dense square complex matrices and the kernels that operate on them.
//
// Each kernel exists twice: `serial::` is the straightforward reference kept
// for testing, `parallel::` distributes rows over OpenMP threads. The
// unqualified entry points dispatch to the parallel versions.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catmap/phase.hpp"

namespace catmap {

/// Row-major N x N complex matrix. Row index is the output coordinate Q,
/// column index the input coordinate Q'.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

    std::span<const Complex> values() const noexcept { return data_; }
    std::span<Complex> values() noexcept { return data_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

using Vector = std::vector<Complex>;

namespace kernels {

namespace serial {
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
/// a^dagger * b
ComplexMatrix adjoint_multiply(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
Vector apply(const ComplexMatrix &a, std::span<const Complex> x);
}  // namespace serial

namespace parallel {
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint_multiply(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
Vector apply(const ComplexMatrix &a, std::span<const Complex> x);
}  // namespace parallel

}  // namespace kernels

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

Vector operator*(const ComplexMatrix &a, std::span<const Complex> x);

/// Entrywise max-norm of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

double max_abs(const ComplexMatrix &a);

/// ||U^dagger U - I||_max
double unitarity_error(const ComplexMatrix &u);

/// a * b - b * a
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace catmap
