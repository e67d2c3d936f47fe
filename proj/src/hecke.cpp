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

#include "catmap/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace catmap {

namespace {

std::int64_t residue(const Int &x, std::int64_t m) {
    return static_cast<std::int64_t>(nt::floor_mod(x, Int(m)));
}

bool commutes(const ModMatrix &x, const ModMatrix &y) { return multiply(x, y) == multiply(y, x); }

double tolerance_for(HilbertDim n, double scale) { return 1e-8 * double(n.value()) * scale; }

}  // namespace

ModMatrix reduce_mod(const IntMatrix2 &m, std::int64_t modulus) {
    if (modulus < 1) throw Error(ErrorCode::NonPositiveModulus, "modulus " + std::to_string(modulus));
    return {residue(m.a, modulus), residue(m.b, modulus), residue(m.c, modulus), residue(m.d, modulus), modulus};
}

ModMatrix reduce_mod(const ThetaMatrix &m, std::int64_t modulus) { return reduce_mod(m.matrix(), modulus); }

ModMatrix multiply(const ModMatrix &x, const ModMatrix &y) {
    const std::int64_t m = x.modulus;
    auto f = [m](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        return (nt::mul_mod(p, q, m) + nt::mul_mod(r, s, m)) % m;
    };
    return {f(x.a, y.a, x.b, y.c), f(x.a, y.b, x.b, y.d), f(x.c, y.a, x.d, y.c), f(x.c, y.b, x.d, y.d), m};
}

std::int64_t det(const ModMatrix &m) {
    return nt::floor_mod(nt::mul_mod(m.a, m.d, m.modulus) - nt::mul_mod(m.b, m.c, m.modulus), m.modulus);
}

std::string to_string(const ModMatrix &m) {
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) + "," +
           std::to_string(m.d) + ") mod " + std::to_string(m.modulus);
}

bool congruent(const IntMatrix2 &x, const IntMatrix2 &y, const Int &modulus) {
    return (x.a - y.a) % modulus == 0 && (x.b - y.b) % modulus == 0 && (x.c - y.c) % modulus == 0 &&
           (x.d - y.d) % modulus == 0;
}

CongruenceReport verify_mod4N(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n, double tolerance_scale) {
    if (!congruent(a.matrix(), b.matrix(), Int(4 * n.value()))) {
        throw Error(ErrorCode::NotCongruent,
                    to_string(a.matrix()) + " vs " + to_string(b.matrix()) + " mod " + std::to_string(4 * n.value()));
    }
    CongruenceReport r;
    r.max_entry_error = max_abs_diff(build(a, n), build(b, n));
    r.tolerance = tolerance_for(n, tolerance_scale);
    r.pass = r.max_entry_error < r.tolerance;
    return r;
}

Mod2NReport mod2N_factor(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n, double tolerance_scale) {
    if (!congruent(a.matrix(), b.matrix(), Int(2 * n.value()))) {
        throw Error(ErrorCode::NotCongruent,
                    to_string(a.matrix()) + " vs " + to_string(b.matrix()) + " mod " + std::to_string(2 * n.value()));
    }
    const IntMatrix2 c = inverse(b.matrix()) * a.matrix();
    Mod2NReport r;
    r.connecting_a = c.a;
    // c.a = 1 mod 2N, so it is odd and nonzero
    r.factor = jacobi(Int(n.value()), nt::abs(c.a));
    const ComplexMatrix ub = build(b, n);
    r.max_entry_error = max_abs_diff(build(a, n), Complex(double(r.factor)) * ub);
    r.tolerance = tolerance_for(n, tolerance_scale);
    r.verified = r.max_entry_error < r.tolerance;
    return r;
}

ThetaMatrix congruent_partner(const ThetaMatrix &a, std::int64_t modulus, std::uint64_t seed,
                              std::size_t max_word_len) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> k_dist(-2, 2);
    const std::size_t len = 1 + rng() % std::max<std::size_t>(max_word_len, 1);
    IntMatrix2 c;
    for (std::size_t i = 0; i < len; ++i) {
        const Int step = Int(modulus) * k_dist(rng);
        c = c * ((rng() & 1) ? IntMatrix2{1, step, 0, 1} : IntMatrix2{1, 0, step, 1});
    }
    return ThetaMatrix(a.matrix() * c);
}

std::optional<std::pair<ThetaMatrix, ThetaMatrix>> find_negative_mod2N_pair(const ThetaMatrix &a,
                                                                             HilbertDim n) {
    const Int two_n = 2 * n.value();
    for (std::int64_t k = 1; k <= 64; ++k) {
        for (int s : {1, -1}) {
            const Int kk = s * k;
            const Int top = 1 + two_n * kk;
            if (jacobi(Int(n.value()), nt::abs(top)) != -1) continue;
            // (1 + 2Nk)(1 - 2Nk) - (2N)(-2N k^2) = 1
            const IntMatrix2 c{top, two_n, -two_n * kk * kk, 1 - two_n * kk};
            return std::pair{ThetaMatrix(a.matrix() * c), a};
        }
    }
    return std::nullopt;
}

namespace {

void check_cap(HilbertDim n, std::int64_t max_4n) {
    if (4 * n.value() > max_4n) {
        throw Error(ErrorCode::CapExceeded,
                    "4N = " + std::to_string(4 * n.value()) + " exceeds cap " + std::to_string(max_4n));
    }
}

// Members of the commutant with top-left entry x.
void scan_row(const ModMatrix &am, std::int64_t x, std::vector<ModMatrix> &out) {
    const std::int64_t m = am.modulus;
    for (std::int64_t y = 0; y < m; ++y) {
        if ((x * y) % 2 != 0) continue;
        for (std::int64_t z = 0; z < m; ++z) {
            for (std::int64_t w = 0; w < m; ++w) {
                if ((z * w) % 2 != 0) continue;
                const ModMatrix b{x, y, z, w, m};
                if (det(b) != 1 % m) continue;
                if (commutes(am, b)) out.push_back(b);
            }
        }
    }
}

}  // namespace

std::vector<ModMatrix> commutant_mod(const ThetaMatrix &a, HilbertDim n, std::int64_t max_4n) {
    check_cap(n, max_4n);
    const ModMatrix am = reduce_mod(a, 4 * n.value());
    const std::int64_t m = am.modulus;
    std::vector<std::vector<ModMatrix>> rows(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t x = 0; x < m; ++x) scan_row(am, x, rows[static_cast<std::size_t>(x)]);
    std::vector<ModMatrix> out;
    for (auto &r : rows) out.insert(out.end(), r.begin(), r.end());
    // rows are scanned in lexicographic order already
    return out;
}

std::vector<ModMatrix> commutant_mod_serial(const ThetaMatrix &a, HilbertDim n, std::int64_t max_4n) {
    check_cap(n, max_4n);
    const ModMatrix am = reduce_mod(a, 4 * n.value());
    std::vector<ModMatrix> out;
    for (std::int64_t x = 0; x < am.modulus; ++x) scan_row(am, x, out);
    return out;
}

ThetaMatrix lift(const ModMatrix &target, std::int64_t bound) {
    const std::int64_t m = target.modulus;
    if (det(target) != 1 % m) throw Error(ErrorCode::DetNotOne, to_string(target));
    if (m % 2 == 0 && ((target.a * target.b) % 2 != 0 || (target.c * target.d) % 2 != 0)) {
        throw Error(ErrorCode::NotThetaMember, to_string(target));
    }
    // Candidate top rows, smallest first.
    std::vector<std::pair<std::int64_t, std::int64_t>> tops;
    for (std::int64_t i = -bound; i < bound; ++i) {
        for (std::int64_t j = -bound; j < bound; ++j) tops.emplace_back(target.a + m * i, target.b + m * j);
    }
    std::stable_sort(tops.begin(), tops.end(), [](const auto &p, const auto &q) {
        return std::abs(p.first) + std::abs(p.second) < std::abs(q.first) + std::abs(q.second);
    });
    const Int mm = m;
    for (const auto &[ta, tb] : tops) {
        if (std::gcd(ta, tb) != 1) continue;
        const Int a = ta, b = tb;
        auto [g, u, v] = nt::extended_gcd(a, b);
        (void)g;
        // a u + b v = 1, so (c, d) = (-v, u) completes the row; shift by t (a, b).
        const Int x = -v, y = u;
        Int t = nt::floor_mod(Int(u * (target.c - x) + v * (target.d - y)), mm);
        if (2 * t > mm) t -= mm;
        for (const Int &shift : {t, Int(t + mm), Int(t - mm)}) {
            const IntMatrix2 cand{a, b, x + shift * a, y + shift * b};
            if (cand.det() != 1 || !is_theta(cand)) continue;
            if (reduce_mod(cand, m) != target) continue;
            return ThetaMatrix(cand);
        }
    }
    throw Error(ErrorCode::LiftFailure, to_string(target) + " with L = " + std::to_string(bound));
}

HeckeReport verify_hecke(const ThetaMatrix &a, HilbertDim n, std::size_t samples, std::uint64_t seed,
                         double tolerance_scale, std::int64_t max_4n) {
    const std::vector<ModMatrix> members = commutant_mod(a, n, max_4n);
    HeckeReport r;
    r.commutant_size = members.size();
    r.tolerance = tolerance_for(n, tolerance_scale);

    std::vector<std::size_t> picks(members.size());
    std::iota(picks.begin(), picks.end(), std::size_t{0});
    if (samples != 0 && samples < picks.size()) {
        std::mt19937_64 rng(seed);
        std::shuffle(picks.begin(), picks.end(), rng);
        picks.resize(samples);
        std::sort(picks.begin(), picks.end());
    }

    std::vector<ThetaMatrix> lifts;
    lifts.reserve(picks.size());
    for (std::size_t i : picks) lifts.push_back(lift(members[i]));

    const ComplexMatrix ua = build(a, n);
    std::vector<ComplexMatrix> ub(lifts.size());
    std::vector<double> errs(lifts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        ub[i] = build_serial(lifts[i], n);
        const ComplexMatrix left = kernels::serial::multiply(ua, ub[i]);
        const ComplexMatrix right = kernels::serial::multiply(ub[i], ua);
        errs[i] = kernels::serial::max_abs_diff(left, right);
    }
    for (double e : errs) r.max_commutator = std::max(r.max_commutator, e);
    r.checked = lifts.size();

    const std::size_t family = std::min<std::size_t>(lifts.size(), 16);
    for (std::size_t i = 0; i < family; ++i) {
        for (std::size_t j = i + 1; j < family; ++j) {
            if (!commutes(members[picks[i]], members[picks[j]])) continue;
            r.max_pair_commutator = std::max(r.max_pair_commutator, max_abs_diff(ub[i] * ub[j], ub[j] * ub[i]));
            ++r.pairs_checked;
        }
    }
    r.sample_lifts.assign(lifts.begin(), lifts.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(lifts.size(), 8)));
    r.pass = r.max_commutator < r.tolerance && r.max_pair_commutator < r.tolerance;
    return r;
}

}  // namespace catmap
