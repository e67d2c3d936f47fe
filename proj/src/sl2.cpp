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

#include "catmap/sl2.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <sstream>

namespace catmap {

IntMatrix2 multiply(const IntMatrix2 &x, const IntMatrix2 &y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

IntMatrix2 operator*(const IntMatrix2 &x, const IntMatrix2 &y) { return multiply(x, y); }

IntMatrix2 inverse(const IntMatrix2 &m) {
    if (m.det() != 1) throw Error(ErrorCode::DetNotOne, to_string(m));
    return {m.d, -m.b, -m.c, m.a};
}

IntMatrix2 transpose(const IntMatrix2 &m) { return {m.a, m.c, m.b, m.d}; }

bool is_theta(const IntMatrix2 &m) {
    return m.det() == 1 && nt::is_even(Int(m.a * m.b)) && nt::is_even(Int(m.c * m.d));
}

std::string to_string(const IntMatrix2 &m) {
    return "(" + m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str() + ")";
}

std::ostream &operator<<(std::ostream &os, const IntMatrix2 &m) { return os << to_string(m); }

namespace {

Int parse_integer(std::string_view token) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (token.size() == start) throw Error(ErrorCode::ParseError, "empty integer");
    for (std::size_t i = start; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
            throw Error(ErrorCode::ParseError, "bad integer '" + std::string(token) + "'");
        }
    }
    if (token[0] == '+') token.remove_prefix(1);
    return Int(std::string(token));
}

}  // namespace

IntMatrix2 parse_matrix(std::string_view text) {
    std::vector<Int> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        entries.push_back(parse_integer(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (entries.size() != 4) {
        throw Error(ErrorCode::ParseError, "expected a,b,c,d but got " + std::to_string(entries.size()) + " entries");
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

ThetaMatrix::ThetaMatrix(IntMatrix2 m) : m_(std::move(m)) {
    if (!is_theta(m_)) throw Error(ErrorCode::NotThetaMember, to_string(m_));
    // det = 1 makes a, b coprime and ab even, so exactly one of them is even.
    if (m_.a != 0 && m_.b != 0 && nt::is_even(m_.a) == nt::is_even(m_.b)) {
        throw Error(ErrorCode::InvalidParity, to_string(m_));
    }
}

ThetaMatrix ThetaMatrix::inverse() const { return ThetaMatrix(catmap::inverse(m_)); }

ThetaMatrix operator*(const ThetaMatrix &x, const ThetaMatrix &y) { return ThetaMatrix(x.m_ * y.m_); }

const IntMatrix2 &generator_matrix(Generator g) {
    switch (g) {
    case Generator::Splus: return generators::S_plus;
    case Generator::Sminus: return generators::S_minus;
    case Generator::P: return generators::parity;
    case Generator::T2plus: return generators::T2_plus;
    case Generator::T2minus: return generators::T2_minus;
    }
    return generators::parity;
}

Generator inverse(Generator g) {
    switch (g) {
    case Generator::Splus: return Generator::Sminus;
    case Generator::Sminus: return Generator::Splus;
    case Generator::P: return Generator::P;
    case Generator::T2plus: return Generator::T2minus;
    case Generator::T2minus: return Generator::T2plus;
    }
    return g;
}

ThetaMatrix evaluate(const GeneratorWord &w) {
    IntMatrix2 m;
    for (Generator g : w) m = m * generator_matrix(g);
    return ThetaMatrix(std::move(m));
}

GeneratorWord decompose(const ThetaMatrix &theta) {
    IntMatrix2 cur = theta.matrix();
    GeneratorWord right;  // invariant: theta * product(right) == cur
    auto apply = [&](Generator g) {
        cur = cur * generator_matrix(g);
        right.push_back(g);
    };
    auto apply_power = [&](const Int &k) {
        for (Int i = 0; i < k; ++i) apply(Generator::T2plus);
        for (Int i = 0; i > k; --i) apply(Generator::T2minus);
    };

    while (true) {
        if (cur.b == 0) {
            // T_m^{+-}; P turns T_m^- into T_{-m}^+, then the even c is walked to zero.
            if (cur.a == -1) apply(Generator::P);
            apply_power(Int(-cur.c / 2));
            break;
        }
        if (cur.a == 0) {
            // W-form (0, +-1; -+1, w): (0 b; c d) S+ = (b 0; d -c).
            apply(Generator::Splus);
            continue;
        }
        // a -> a + 2bk with |a + 2bk| minimal, ties toward a nonnegative result.
        const Int step = nt::abs(Int(2 * cur.b));
        Int r = nt::floor_mod(cur.a, step);
        if (nt::abs(Int(r - step)) < r) r -= step;
        apply_power(Int((r - cur.a) / (2 * cur.b)));
        if (cur.a == 0) continue;
        // |a| < |b| now; swap so the new a is |b| >= 0.
        apply(cur.b > 0 ? Generator::Splus : Generator::Sminus);
    }

    GeneratorWord word;
    word.reserve(right.size());
    for (auto it = right.rbegin(); it != right.rend(); ++it) word.push_back(inverse(*it));
    return reduce_word(word);
}

GeneratorWord reduce_word(const GeneratorWord &w) {
    GeneratorWord out;
    bool parity = false;
    for (Generator g : w) {
        switch (g) {
        case Generator::P:
            parity = !parity;
            break;
        case Generator::Sminus:
            // S- = S+ P
            parity = !parity;
            [[fallthrough]];
        case Generator::Splus:
            if (!out.empty() && out.back() == Generator::Splus) {
                out.pop_back();  // S+ S+ = P
                parity = !parity;
            } else {
                out.push_back(Generator::Splus);
            }
            break;
        case Generator::T2plus:
        case Generator::T2minus:
            if (!out.empty() && out.back() == inverse(g)) {
                out.pop_back();
            } else {
                out.push_back(g);
            }
            break;
        }
    }
    if (parity) {
        if (!out.empty() && out.back() == Generator::Splus) {
            out.back() = Generator::Sminus;
        } else {
            out.push_back(Generator::P);
        }
    }
    return out;
}

std::string to_string(const GeneratorWord &w) {
    std::string s;
    for (Generator g : w) {
        if (!s.empty()) s += ' ';
        switch (g) {
        case Generator::Splus: s += "S"; break;
        case Generator::Sminus: s += "S-"; break;
        case Generator::P: s += "P"; break;
        case Generator::T2plus: s += "T2"; break;
        case Generator::T2minus: s += "T2-"; break;
        }
    }
    return s;
}

GeneratorWord parse_word(std::string_view text) {
    GeneratorWord w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        if (token == "S" || token == "S+") {
            w.push_back(Generator::Splus);
        } else if (token == "S-") {
            w.push_back(Generator::Sminus);
        } else if (token == "P") {
            w.push_back(Generator::P);
        } else if (token == "T2" || token == "T2+") {
            w.push_back(Generator::T2plus);
        } else if (token == "T2-") {
            w.push_back(Generator::T2minus);
        } else {
            throw Error(ErrorCode::ParseError, "unknown generator token '" + token + "'");
        }
    }
    return w;
}

GeneratorWord random_word(std::uint64_t seed, std::size_t max_word_len) {
    std::mt19937_64 rng(seed);
    const std::size_t len = static_cast<std::size_t>(rng() % (max_word_len + 1));
    GeneratorWord w(len);
    for (auto &g : w) g = static_cast<Generator>(rng() % 5);
    return w;
}

ThetaMatrix random_theta(std::uint64_t seed, std::size_t max_word_len) {
    return evaluate(random_word(seed, max_word_len));
}

IntMatrix2 random_sl2(std::uint64_t seed, std::size_t max_word_len) {
    static const IntMatrix2 tokens[4] = {
        {0, -1, 1, 0}, {0, 1, -1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}};
    std::mt19937_64 rng(seed);
    const std::size_t len = static_cast<std::size_t>(rng() % (max_word_len + 1));
    IntMatrix2 m;
    for (std::size_t i = 0; i < len; ++i) m = m * tokens[rng() % 4];
    return m;
}

}  // namespace catmap
