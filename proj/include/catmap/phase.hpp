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

#pragma once

#include <complex>
#include <cstdint>

#include "catmap/numtheory.hpp"

namespace catmap {

using Complex = std::complex<double>;

/// e(num/den) := exp(2*pi*i*num/den), den > 0.
///
/// The argument is reduced mod 1 exactly before any floating point is
/// involved, so the accuracy does not depend on the size of num. Multiples
/// of 1/8 are returned from an exact table.
Complex unit_phase(std::int64_t num, std::int64_t den);
Complex unit_phase(const Int &num, const Int &den);

/// e(k/8).
Complex eighth_root(int k);

}  // namespace catmap
