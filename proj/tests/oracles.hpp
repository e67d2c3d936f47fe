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

// Reference implementations used only by the tests. They follow the textbook
// definitions directly and share no code paths with the library kernels.

#pragma once

#include <cstdint>

#include "catmap/matrix.hpp"
#include "catmap/sl2.hpp"

namespace catmap::oracle {

/// Legendre symbol by Euler's criterion, p an odd prime.
int legendre(std::int64_t q, std::int64_t p);

/// Jacobi symbol as the product of Legendre symbols over the trial
/// factorization of odd r >= 1.
int jacobi(std::int64_t q, std::int64_t r);

/// (1/sqrt|beta|) sum_{k=0}^{|beta|-1} e((alpha k^2 + gamma k) / 2 beta) in long
/// double. The sum only depends on the residue of k when alpha*beta + gamma
/// is even; otherwise the shifted terms cancel the original ones and the
/// well-defined value is 0.
Complex gauss_sum(std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

/// e(num / den) in long double, argument reduced exactly first.
Complex e(std::int64_t num, std::int64_t den);

/// h(a, b) from the two-branch definition, using oracle::jacobi.
Complex h(std::int64_t a, std::int64_t b);

/// U_N(A) entry by entry from the case formulas with oracle::gauss_sum.
/// Entries of A must fit comfortably in 32 bits.
ComplexMatrix propagator(const IntMatrix2 &a, std::int64_t n);

/// Dense T_N(m) = e(-m1 m2 / 2N) t2^{m2} t1^{m1}, by multiplying powers of the
/// translation matrices.
ComplexMatrix weyl(std::int64_t m1, std::int64_t m2, std::int64_t n);

/// Plain triple loop.
ComplexMatrix multiply(const ComplexMatrix &x, const ComplexMatrix &y);

std::int64_t to_i64(const Int &x);

}  // namespace catmap::oracle
