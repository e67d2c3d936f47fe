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

// Reduction of propagators modulo 4N and 2N, and the mod-4N commutant of a
// cat map together with the commuting family of propagators it generates.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catmap/propagator.hpp"

namespace catmap {

/// Entries are residues in [0, modulus).
struct ModMatrix {
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    std::int64_t modulus = 1;

    friend auto operator<=>(const ModMatrix &, const ModMatrix &) = default;
};

ModMatrix reduce_mod(const IntMatrix2 &m, std::int64_t modulus);
ModMatrix reduce_mod(const ThetaMatrix &m, std::int64_t modulus);

ModMatrix multiply(const ModMatrix &x, const ModMatrix &y);
std::int64_t det(const ModMatrix &m);
std::string to_string(const ModMatrix &m);

bool congruent(const IntMatrix2 &x, const IntMatrix2 &y, const Int &modulus);

struct CongruenceReport {
    double max_entry_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// ||U(A) - U(B)||_max against 1e-8 * N * tolerance_scale. Throws NotCongruent
/// unless A = B mod 4N.
CongruenceReport verify_mod4N(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n,
                              double tolerance_scale = 1.0);

struct Mod2NReport {
    int factor = 1;
    Int connecting_a = 1;  // top-left entry of B^{-1} A
    double max_entry_error = 0.0;
    double tolerance = 0.0;
    bool verified = false;
};

/// For A = B mod 2N: C = B^{-1} A = I mod 2N and U(A) = (N/|c_11|) U(B).
/// Throws NotCongruent.
Mod2NReport mod2N_factor(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n,
                         double tolerance_scale = 1.0);

/// A times an element of Gamma(modulus) built from seed: the result is
/// congruent to A mod `modulus` and again in the theta group when `modulus`
/// is even.
ThetaMatrix congruent_partner(const ThetaMatrix &a, std::int64_t modulus, std::uint64_t seed,
                              std::size_t max_word_len = 3);

/// A pair (A, B) with A = B mod 2N and jacobi factor -1, found by searching
/// connecting matrices C = (1 + 2Nk, 2N; -2Nk^2, 1 - 2Nk) with |k| <= 64.
/// Nullopt when jacobi(N, .) is trivial on 1 + 2NZ (N a square, N = 8, ...).
std::optional<std::pair<ThetaMatrix, ThetaMatrix>> find_negative_mod2N_pair(const ThetaMatrix &a,
                                                                             HilbertDim n);

/// Default enumeration cap on 4N.
inline constexpr std::int64_t kDefaultMax4N = 64;

/// All B in Gamma_theta(4N) with AB = BA mod 4N, sorted. Throws CapExceeded
/// when 4N > max_4n.
std::vector<ModMatrix> commutant_mod(const ThetaMatrix &a, HilbertDim n, std::int64_t max_4n = kDefaultMax4N);
std::vector<ModMatrix> commutant_mod_serial(const ThetaMatrix &a, HilbertDim n,
                                            std::int64_t max_4n = kDefaultMax4N);

/// Default L: lifted entries stay within |entry| <= modulus * L.
inline constexpr std::int64_t kDefaultLiftBound = 4;

/// A matrix in Gamma_theta reducing to `target`. The top row is searched over
/// offsets in [-L, L]; the bottom row then follows from Bezout. Throws
/// LiftFailure past the budget and NotThetaMember when the target fails the
/// theta parity (odd modulus) or has det != 1.
ThetaMatrix lift(const ModMatrix &target, std::int64_t bound = kDefaultLiftBound);

struct HeckeReport {
    std::size_t commutant_size = 0;
    std::size_t checked = 0;  // lifted members whose commutator was computed
    std::size_t pairs_checked = 0;
    double max_commutator = 0.0;       // ||[U(A), U(B)]||_max over checked B
    double max_pair_commutator = 0.0;  // within the sampled family
    double tolerance = 0.0;
    bool pass = false;
    std::vector<ThetaMatrix> sample_lifts;
};

/// samples = 0 checks every commutant member; otherwise a seeded sample.
/// Pairwise checks run over the first min(samples, 16) sampled members.
HeckeReport verify_hecke(const ThetaMatrix &a, HilbertDim n, std::size_t samples, std::uint64_t seed = 0,
                         double tolerance_scale = 1.0, std::int64_t max_4n = kDefaultMax4N);

}  // namespace catmap
