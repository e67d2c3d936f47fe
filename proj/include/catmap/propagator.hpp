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

// Quantum propagators U_N(A) of theta-group cat maps.
//
// The construction is a case dispatch on the entries of A = (a b; c d):
//
//   b = 0   Shear       T_m^{+-} = (+-1 0; m +-1)    [U phi](Q) = e(+-m Q^2 / 2N) phi(+-Q)
//   a = 0   AntiShear   W_w^{+-} = (0 +-1; -+1 w)    U(Q,Q') = N^{-1/2} e(+-(w Q^2 - 2 Q Q') / 2N)
//   else    General                                  U(Q,Q') = h(a,b) N_b^{-1/2} G(N_b a, b', gamma)
//                                                              * e((d Q^2 - 2 Q Q' + a Q'^2) / 2Nb)
//
// with g = (b,N), N_b = N/g, b' = b/g and gamma = 2(aQ' - Q)/g. The General
// entry vanishes unless gamma is an integer. Parity (P) and Fourier (S^{+-})
// are recognized sub-cases of Shear and AntiShear.
//
// With these phases U_N(AB) = U_N(A) U_N(B) holds exactly on the theta group.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "catmap/gauss.hpp"
#include "catmap/matrix.hpp"
#include "catmap/sl2.hpp"

namespace catmap {

/// Dimension N >= 1 of L^2(Z/NZ).
class HilbertDim {
  public:
    /// Throws InvalidDimension for n < 1.
    explicit HilbertDim(std::int64_t n);

    std::int64_t value() const noexcept { return n_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }

    friend bool operator==(HilbertDim, HilbertDim) = default;

  private:
    std::int64_t n_;
};

enum class CaseKind { Fourier, Parity, Shear, AntiShear, General };

struct CaseTag {
    CaseKind kind = CaseKind::General;
    int sign = 1;      // the +- of S^{+-}, T_m^{+-}, W_w^{+-}
    Int parameter = 0;  // m for Shear, w for AntiShear

    friend bool operator==(const CaseTag &, const CaseTag &) = default;
};

std::string to_string(CaseKind kind);
std::string to_string(const CaseTag &tag);

/// b = 0 -> Shear (Parity when A = P); else a = 0 -> AntiShear (Fourier when w = 0); else General.
CaseTag classify(const ThetaMatrix &m);

/// h(a,b) for a, b nonzero, coprime, exactly one even. Throws InvalidParity or NotCoprime.
Complex h_phase(const Int &a, const Int &b);

enum class Normalization {
    Multiplicative,
    /// sqrt(i) U_N(A) / h(a,b), with h := 1 when a = 0 or b = 0 (the value the
    /// h formula gives there with (0/1) = 1).
    HannayBerry,
};

std::string to_string(Normalization n);

/// U_N(A), rows filled in parallel.
ComplexMatrix build(const ThetaMatrix &m, HilbertDim n, Normalization norm = Normalization::Multiplicative);

/// Single-threaded reference of `build`.
ComplexMatrix build_serial(const ThetaMatrix &m, HilbertDim n,
                           Normalization norm = Normalization::Multiplicative);

struct MultReport {
    double max_entry_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// ||U(AB) - U(A) U(B)||_max against 1e-8 * N * tolerance_scale.
MultReport verify_mult(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n,
                       double tolerance_scale = 1.0);

/// The unit scalar lambda with U(AB) = lambda U(A) U(B), read off at the
/// largest-magnitude entry of U(A) U(B).
Complex projective_phase(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n,
                         Normalization norm = Normalization::Multiplicative);

/// U(P)^2 = 1, U(S+)^2 U(P) = 1, [U(S+), U(P)] = 0, [U(T2+), U(P)] = 0.
struct RelationsReport {
    std::array<double, 4> errors{};
    double tolerance = 0.0;
    bool pass = false;
};

inline constexpr std::array<const char *, 4> kRelationNames = {
    "U(P)^2 = 1", "U(S+)^2 U(P) = 1", "U(S+) U(P) = U(P) U(S+)", "U(T2+) U(P) = U(P) U(T2+)"};

/// Tolerance 1e-10 * N * tolerance_scale.
RelationsReport verify_relations(HilbertDim n, double tolerance_scale = 1.0);

/// sqrt((b,N)) h(a,b) G(N_b a, b', 0): the predicted value of [U(A) delta_0](0)
/// for General-case A (a, b nonzero).
Complex predicted_delta0_probe(const ThetaMatrix &m, HilbertDim n);

}  // namespace catmap
