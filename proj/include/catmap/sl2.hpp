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

// 2x2 integer matrices, the theta group and its generator words.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catmap/numtheory.hpp"

namespace catmap {

/// (a b; c d), row-major.
struct IntMatrix2 {
    Int a = 1, b = 0, c = 0, d = 1;

    static IntMatrix2 identity() { return {}; }

    Int det() const { return a * d - b * c; }

    friend bool operator==(const IntMatrix2 &, const IntMatrix2 &) = default;
};

IntMatrix2 multiply(const IntMatrix2 &x, const IntMatrix2 &y);
IntMatrix2 operator*(const IntMatrix2 &x, const IntMatrix2 &y);

/// Adjugate of a determinant-one matrix. Throws DetNotOne.
IntMatrix2 inverse(const IntMatrix2 &m);

IntMatrix2 transpose(const IntMatrix2 &m);

/// det = 1, ab even and cd even.
bool is_theta(const IntMatrix2 &m);

std::string to_string(const IntMatrix2 &m);
std::ostream &operator<<(std::ostream &os, const IntMatrix2 &m);

/// Parses "a,b,c,d" (row-major). Throws ParseError.
IntMatrix2 parse_matrix(std::string_view text);

/// An element of the theta group. Construction validates membership.
class ThetaMatrix {
  public:
    ThetaMatrix() = default;
    /// Throws NotThetaMember.
    explicit ThetaMatrix(IntMatrix2 m);

    const IntMatrix2 &matrix() const noexcept { return m_; }
    const Int &a() const noexcept { return m_.a; }
    const Int &b() const noexcept { return m_.b; }
    const Int &c() const noexcept { return m_.c; }
    const Int &d() const noexcept { return m_.d; }

    ThetaMatrix inverse() const;

    friend ThetaMatrix operator*(const ThetaMatrix &x, const ThetaMatrix &y);
    friend bool operator==(const ThetaMatrix &, const ThetaMatrix &) = default;

  private:
    IntMatrix2 m_;
};

enum class Generator : std::uint8_t { Splus, Sminus, P, T2plus, T2minus };

using GeneratorWord = std::vector<Generator>;

namespace generators {
inline const IntMatrix2 S_plus{0, -1, 1, 0};
inline const IntMatrix2 S_minus{0, 1, -1, 0};
inline const IntMatrix2 parity{-1, 0, 0, -1};
inline const IntMatrix2 T2_plus{1, 0, 2, 1};
inline const IntMatrix2 T2_minus{1, 0, -2, 1};
}  // namespace generators

const IntMatrix2 &generator_matrix(Generator g);
Generator inverse(Generator g);

/// Left-to-right product of the token matrices; the empty word is the identity.
ThetaMatrix evaluate(const GeneratorWord &w);

/// Writes A as a word by reducing it to the identity with right
/// multiplications by T2^{+-1}, S^{+-} and P, then inverting the recorded
/// sequence. The result is passed through reduce_word. Not minimal.
GeneratorWord decompose(const ThetaMatrix &m);

/// Applies P^2 = 1, S+^2 = P, centrality of P and free cancellation.
/// The output contains no P except possibly one trailing P, no adjacent
/// inverse pairs, and S- only as a final token (standing for S+ P).
GeneratorWord reduce_word(const GeneratorWord &w);

/// Space-separated tokens "S", "S-", "P", "T2", "T2-".
std::string to_string(const GeneratorWord &w);
/// Case-insensitive inverse of to_string. Throws ParseError.
GeneratorWord parse_word(std::string_view text);

/// Uniform word length in [0, max_word_len], uniform tokens; mt19937_64 seeded by `seed`.
GeneratorWord random_word(std::uint64_t seed, std::size_t max_word_len);
ThetaMatrix random_theta(std::uint64_t seed, std::size_t max_word_len);

/// Random SL(2,Z) element (not necessarily theta) from words in S and T^{+-1}, T = (1 1; 0 1).
IntMatrix2 random_sl2(std::uint64_t seed, std::size_t max_word_len);

}  // namespace catmap
