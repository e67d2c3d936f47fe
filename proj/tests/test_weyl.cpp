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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "catmap/weyl.hpp"
#include "oracles.hpp"

using namespace catmap;

namespace {
ComplexMatrix power(const ComplexMatrix &t, int k) {
    ComplexMatrix r = ComplexMatrix::identity(t.dim());
    for (int i = 0; i < k; ++i) r = r * t;
    return r;
}
}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("delta basis") {
    const Vector d = delta_basis(0, HilbertDim(2));
    CHECK(d[0] == Complex(std::sqrt(2.0)));
    CHECK(d[1] == Complex(0.0));
    for (int n = 1; n <= 9; ++n) {
        const HilbertDim dim(n);
        ComplexMatrix completeness(dim.size());
        for (int nu = 0; nu < n; ++nu) {
            const Vector x = delta_basis(nu, dim);
            for (int mu = 0; mu < n; ++mu) {
                const Complex ip = inner_product(x, delta_basis(mu, dim));
                CHECK(std::abs(ip - Complex(nu == mu ? 1.0 : 0.0)) < 1e-12);
            }
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) completeness(r, c) += x[r] * std::conj(x[c]) / double(n);
        }
        CHECK(max_abs_diff(completeness, ComplexMatrix::identity(dim.size())) < 1e-12);
    }
    try {
        delta_basis(3, HilbertDim(3));
        FAIL("expected IndexOutOfRange");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
    CHECK_THROWS_AS(delta_basis(-1, HilbertDim(3)), Error);
}

TEST_CASE("translations") {
    const HilbertDim three(3);
    // t2 phi(Q) = phi(Q + 1): delta_0 moves to index 2
    const Vector moved = translation_t2(three) * std::span<const Complex>(delta_basis(0, three));
    CHECK(std::abs(moved[2] - std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(moved[0]) < 1e-12);
    for (int n = 1; n <= 16; ++n) {
        const HilbertDim dim(n);
        const ComplexMatrix t1 = translation_t1(dim), t2 = translation_t2(dim);
        const ComplexMatrix id = ComplexMatrix::identity(dim.size());
        CHECK(max_abs_diff(power(t1, n), id) < 1e-12);
        CHECK(max_abs_diff(power(t2, n), id) < 1e-12);
        std::mt19937_64 rng(n);
        for (int trial = 0; trial < 4; ++trial) {
            const int m = int(rng() % 12), k = int(rng() % 12);
            const ComplexMatrix lhs = power(t1, m) * power(t2, k);
            const ComplexMatrix rhs = unit_phase(std::int64_t(-m * k), std::int64_t(n)) * (power(t2, k) * power(t1, m));
            CHECK(max_abs_diff(lhs, rhs) < 1e-10);
        }
    }
}

TEST_CASE("weyl operators") {
    for (int n = 1; n <= 10; ++n) {
        const HilbertDim dim(n);
        CHECK(max_abs_diff(weyl_op({0, 0}, dim), ComplexMatrix::identity(dim.size())) == 0.0);
        for (int m1 = -5; m1 <= 5; ++m1)
            for (int m2 = -5; m2 <= 5; ++m2) {
                const ComplexMatrix t = weyl_op({m1, m2}, dim);
                CHECK(max_abs_diff(t, oracle::weyl(m1, m2, n)) < 1e-10);
                // depends on the index only mod 2N
                CHECK(max_abs_diff(t, weyl_op({m1 + 2 * n, m2 - 2 * n}, dim)) < 1e-12);
            }
    }
}

TEST_CASE("multiplication rule and commutator") {
    std::mt19937_64 rng(3);
    auto draw = [&] { return std::int64_t(rng() % 17) - 8; };
    for (int n = 1; n <= 16; ++n) {
        const HilbertDim dim(n);
        for (int trial = 0; trial < 20; ++trial) {
            const WeylIndex m{draw(), draw()}, k{draw(), draw()};
            const Int omega = symplectic_form(m, k);
            const ComplexMatrix tm = weyl_op(m, dim), tk = weyl_op(k, dim), sum = weyl_op(m + k, dim);
            const Complex rule = unit_phase(Int(-omega), Int(2 * n));
            CHECK(max_abs_diff(tm * tk, rule * sum) < 1e-10);
            const double s = std::sin(std::numbers::pi * omega.convert_to<double>() / n);
            CHECK(max_abs_diff(commutator(tm, tk), Complex(0, -2 * s) * sum) < 1e-10);
        }
    }
}

TEST_CASE("quantization") {
    const HilbertDim dim(7);
    CHECK(max_abs_diff(quantize(Observable::constant(1.0), dim), ComplexMatrix::identity(7)) < 1e-15);
    CHECK(max_abs_diff(quantize(Observable::mode({2, 3}), dim), weyl_op({2, 3}, dim)) < 1e-15);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Observable f;
        for (int j = 0; j < 3; ++j) {
            const WeylIndex m{std::int64_t(rng() % 9) - 4, std::int64_t(rng() % 9) - 4};
            const Complex c(double(rng() % 100) / 50 - 1, double(rng() % 100) / 50 - 1);
            f.coefficients[m] += c;
            f.coefficients[WeylIndex{-m.n1, -m.n2}] += std::conj(c);
        }
        REQUIRE(f.is_real());
        const ComplexMatrix op = quantize(f, dim);
        CHECK(max_abs_diff(op, op.adjoint()) < 1e-10);
    }
    CHECK_FALSE(Observable::mode({1, 0}, Complex(0, 1)).is_real());
}

TEST_CASE("classical transport") {
    const Observable f = Observable::mode({1, 2}, 3.0);
    CHECK(compose_classical(f, IntMatrix2::identity()).coefficients == f.coefficients);
    const Observable g = compose_classical(f, generators::S_plus);
    REQUIRE(g.coefficients.size() == 1);
    // S+^T (1,2) = (2,-1)
    CHECK(g.coefficients.begin()->first == WeylIndex{2, -1});
    const IntMatrix2 a{2, 1, 3, 2};
    CHECK(compose_classical(compose_classical(f, a), inverse(a)).coefficients == f.coefficients);
}

TEST_CASE("egorov pins the transpose action at T2+, N = 4") {
    const ThetaMatrix t2(generators::T2_plus);
    CHECK(verify_egorov_all_modes(t2, HilbertDim(4)).pass);
    // the inverse action would fail
    const ComplexMatrix u = build(t2, HilbertDim(4));
    double worst = 0;
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2) {
            const WeylIndex m{m1, m2};
            const ComplexMatrix lhs = u.adjoint() * weyl_op(m, HilbertDim(4)) * u;
            worst = std::max(worst, max_abs_diff(lhs, weyl_op(transport(m, inverse(generators::T2_plus)), HilbertDim(4))));
        }
    CHECK(worst > 0.5);
}

TEST_CASE("egorov examples") {
    CHECK(verify_egorov_all_modes(ThetaMatrix(), HilbertDim(6)).max_error < 1e-12);
    for (int n = 1; n <= 12; ++n) CHECK(verify_egorov_all_modes(ThetaMatrix(generators::S_plus), HilbertDim(n)).pass);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ThetaMatrix a = random_theta(seed, 10);
        const int n = 1 + int(seed % 16);
        const EgorovReport r = verify_egorov_all_modes(a, HilbertDim(n));
        CHECK_MESSAGE(r.pass, to_string(a.matrix()) << " N=" << n << " err=" << r.max_error);
        CHECK(r.modes.size() == std::size_t(n * n));
    }
}

TEST_CASE("egorov on composite observables matches the dense oracle") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ThetaMatrix a = random_theta(seed, 8);
        const int n = 2 + int(seed % 9);
        Observable f;
        for (int j = 0; j < 4; ++j) f.coefficients[{std::int64_t(rng() % 13) - 6, std::int64_t(rng() % 13) - 6}] += 1.0 + j;
        const EgorovReport r = verify_egorov(a, HilbertDim(n), f);
        CHECK(r.pass);
        const ComplexMatrix u = oracle::propagator(a.matrix(), n);
        ComplexMatrix op{static_cast<std::size_t>(n)}, transported{static_cast<std::size_t>(n)};
        for (const auto &[m, c] : f.coefficients) {
            ComplexMatrix t = oracle::weyl(oracle::to_i64(m.n1), oracle::to_i64(m.n2), n);
            t *= c;
            op += t;
            const WeylIndex am = transport(m, a.matrix());
            ComplexMatrix ta = oracle::weyl(oracle::to_i64(am.n1), oracle::to_i64(am.n2), n);
            ta *= c;
            transported += ta;
        }
        const ComplexMatrix lhs = oracle::multiply(oracle::multiply(u.adjoint(), op), u);
        CHECK(max_abs_diff(lhs, transported) < 1e-8 * n);
    }
}

TEST_CASE("mode sweep is deterministic") {
    const ThetaMatrix a = random_theta(99, 10);
    const EgorovReport r1 = verify_egorov_all_modes(a, HilbertDim(9));
    const EgorovReport r2 = verify_egorov_all_modes(a, HilbertDim(9));
    REQUIRE(r1.modes.size() == r2.modes.size());
    for (std::size_t i = 0; i < r1.modes.size(); ++i) {
        CHECK(r1.modes[i].mode == r2.modes[i].mode);
        CHECK(r1.modes[i].error == r2.modes[i].error);
    }
}

TEST_CASE("semiclassical trend") {
    const WeylIndex m{1, 0}, k{0, 1};
    double previous = 1e300;
    for (int n : {4, 8, 16, 32, 64}) {
        const SemiclassicalPoint p = semiclassical_deviation(m, k, HilbertDim(n));
        CHECK(p.relative_deviation <= previous);
        previous = p.relative_deviation;
        CHECK(p.raw_deviation > 0);
    }
    CHECK(previous < 1e-3);
    CHECK(semiclassical_deviation({1, 1}, {2, 2}, HilbertDim(8)).relative_deviation == 0.0);
}

}  // TEST_SUITE
