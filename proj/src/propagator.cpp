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

#include "catmap/propagator.hpp"

#include <cmath>
#include <memory>
#include <type_traits>

namespace catmap {

HilbertDim::HilbertDim(std::int64_t n) : n_(n) {
    if (n < 1) throw Error(ErrorCode::InvalidDimension, "N = " + std::to_string(n));
}

std::string to_string(CaseKind kind) {
    switch (kind) {
    case CaseKind::Fourier: return "Fourier";
    case CaseKind::Parity: return "Parity";
    case CaseKind::Shear: return "Shear";
    case CaseKind::AntiShear: return "AntiShear";
    case CaseKind::General: return "General";
    }
    return "?";
}

std::string to_string(const CaseTag &tag) {
    const std::string pm = tag.sign > 0 ? "+" : "-";
    switch (tag.kind) {
    case CaseKind::Fourier: return "Fourier(" + pm + ")";
    case CaseKind::Parity: return "Parity";
    case CaseKind::Shear: return "Shear(m=" + tag.parameter.str() + "," + pm + ")";
    case CaseKind::AntiShear: return "AntiShear(w=" + tag.parameter.str() + "," + pm + ")";
    case CaseKind::General: return "General";
    }
    return "?";
}

std::string to_string(Normalization n) {
    return n == Normalization::Multiplicative ? "multiplicative" : "hannay-berry";
}

CaseTag classify(const ThetaMatrix &m) {
    if (m.b() == 0) {
        // a = d = +-1
        const int s = nt::sign(m.a());
        if (s < 0 && m.c() == 0) return {CaseKind::Parity, -1, 0};
        return {CaseKind::Shear, s, m.c()};
    }
    if (m.a() == 0) {
        // (0, s; -s, w)
        const int s = nt::sign(m.b());
        if (m.d() == 0) return {CaseKind::Fourier, -s, 0};  // S^{+-} = W_0^{-+}
        return {CaseKind::AntiShear, s, m.d()};
    }
    return {CaseKind::General, 1, 0};
}

Complex h_phase(const Int &a, const Int &b) {
    if (a == 0 || b == 0 || nt::is_even(a) == nt::is_even(b)) {
        throw Error(ErrorCode::InvalidParity, "h(" + a.str() + "," + b.str() + ")");
    }
    if (nt::gcd(a, b) != 1) throw Error(ErrorCode::NotCoprime, "h(" + a.str() + "," + b.str() + ")");
    const Int abs_a = nt::abs(a), abs_b = nt::abs(b);
    const int s = nt::sign(a) * nt::sign(b);
    if (nt::is_even(a)) {
        return double(nt::jacobi(abs_a, abs_b)) *
               eighth_root(static_cast<int>(nt::floor_mod(Int(s * (abs_b - 1)), Int(8))));
    }
    return double(nt::jacobi(abs_b, abs_a)) *
           eighth_root(static_cast<int>(nt::floor_mod(Int(-s * abs_a), Int(8))));
}

namespace {

template <nt::Integer I>
I narrow(const Int &x) {
    if constexpr (std::is_same_v<I, Int>) {
        return x;
    } else {
        return static_cast<std::int64_t>(x);
    }
}

/// Fills row Q of U_N(A) (all other entries zero).
class RowFiller {
  public:
    virtual ~RowFiller() = default;
    virtual void fill_row(std::int64_t q, std::span<Complex> row) const = 0;
};

class ShearFiller final : public RowFiller {
  public:
    ShearFiller(int sign, const Int &m, std::int64_t n)
        : sign_(sign), n_(n), coeff_(static_cast<std::int64_t>(nt::floor_mod(Int(sign * m), Int(2 * n)))) {}

    void fill_row(std::int64_t q, std::span<Complex> row) const override {
        const std::int64_t col = nt::floor_mod(sign_ * q, n_);
        row[static_cast<std::size_t>(col)] = unit_phase(nt::mul_mod(coeff_, q * q % (2 * n_), 2 * n_), 2 * n_);
    }

  private:
    int sign_;
    std::int64_t n_;
    std::int64_t coeff_;
};

class AntiShearFiller final : public RowFiller {
  public:
    AntiShearFiller(int sign, const Int &w, std::int64_t n)
        : n_(n), w_(static_cast<std::int64_t>(nt::floor_mod(Int(sign * w), Int(2 * n)))),
          cross_(nt::floor_mod(std::int64_t(-2 * sign), 2 * n)), norm_(1.0 / std::sqrt(double(n))) {}

    void fill_row(std::int64_t q, std::span<Complex> row) const override {
        const std::int64_t den = 2 * n_;
        const std::int64_t diag = nt::mul_mod(w_, q * q % den, den);
        for (std::int64_t qp = 0; qp < n_; ++qp) {
            row[static_cast<std::size_t>(qp)] = norm_ * unit_phase(diag + cross_ * (q * qp % den), den);
        }
    }

  private:
    std::int64_t n_;
    std::int64_t w_;      // sign * w mod 2N
    std::int64_t cross_;  // -2 sign mod 2N
    double norm_;
};

/// General case. I is the integer type used for per-entry residue arithmetic;
/// std::int64_t whenever the moduli fit below 2^62.
template <nt::Integer I>
class GeneralFiller final : public RowFiller {
  public:
    GeneralFiller(const ThetaMatrix &m, std::int64_t n, const Int &g, const GaussClosedForm &gauss,
                  Complex scale)
        : n_(n), g_(narrow<I>(g)), gamma_odd_(gauss.gamma_odd()),
          gauss_coeff_(narrow<I>(gauss.coefficient())), gauss_mod_(narrow<I>(gauss.modulus())),
          scale_(scale) {
        const Int abs_b = nt::abs(m.b());
        const int sb = nt::sign(m.b());
        const Int m1 = 2 * n * abs_b;
        main_mod_ = narrow<I>(m1);
        main_a_ = narrow<I>(nt::floor_mod(Int(sb * m.a()), m1));
        main_d_ = narrow<I>(nt::floor_mod(Int(sb * m.d()), m1));
        main_cross_ = narrow<I>(nt::floor_mod(Int(-2 * sb), m1));
        x_mod_ = narrow<I>(Int(2 * abs_b));
        x_a_ = narrow<I>(nt::floor_mod(m.a(), Int(2 * abs_b)));
    }

    void fill_row(std::int64_t q64, std::span<Complex> row) const override {
        const I q = q64;
        const I q_sq = nt::mul_mod(q, q, main_mod_);
        const I diag = nt::mul_mod(main_d_, q_sq, main_mod_);
        for (std::int64_t qp64 = 0; qp64 < n_; ++qp64) {
            const I qp = qp64;
            // x = aQ' - Q mod 2|b|; gamma = 2x/g mod 4|b'| must be an integer
            const I x = nt::floor_mod(I(nt::mul_mod(x_a_, qp, x_mod_) - q), x_mod_);
            const I two_x = 2 * x;
            if (two_x % g_ != 0) continue;
            const I gamma = two_x / g_;
            if (nt::is_even(gamma) == gamma_odd_) continue;
            const I s = nt::floor_mod(gamma_odd_ ? gamma : I(gamma / 2), gauss_mod_);
            const I gauss_num = nt::mul_mod(nt::mul_mod(gauss_coeff_, s, gauss_mod_), s, gauss_mod_);
            const I main_num = (diag + nt::mul_mod(main_cross_, I(q * qp % main_mod_), main_mod_) +
                                nt::mul_mod(main_a_, I(qp * qp % main_mod_), main_mod_)) %
                               main_mod_;
            row[static_cast<std::size_t>(qp64)] =
                scale_ * unit_phase(main_num, main_mod_) * unit_phase(gauss_num, gauss_mod_);
        }
    }

  private:
    std::int64_t n_;
    I g_;
    bool gamma_odd_;
    I gauss_coeff_, gauss_mod_;
    I main_mod_, main_a_, main_d_, main_cross_;
    I x_mod_, x_a_;
    Complex scale_;
};

std::unique_ptr<RowFiller> make_general(const ThetaMatrix &m, std::int64_t n) {
    const Int g = nt::gcd(m.b(), Int(n));
    const Int n_b = n / g;
    const Int b_prime = m.b() / g;
    GaussClosedForm gauss(n_b * m.a(), b_prime);
    const Complex scale = h_phase(m.a(), m.b()) * gauss.prefactor() / std::sqrt(n_b.convert_to<double>());
    const Int biggest = 2 * Int(n) * nt::abs(m.b());
    if (biggest < (Int(1) << 61)) {
        return std::make_unique<GeneralFiller<std::int64_t>>(m, n, g, gauss, scale);
    }
    return std::make_unique<GeneralFiller<Int>>(m, n, g, gauss, scale);
}

std::unique_ptr<RowFiller> make_filler(const ThetaMatrix &m, std::int64_t n) {
    const CaseTag tag = classify(m);
    switch (tag.kind) {
    case CaseKind::Parity:
        return std::make_unique<ShearFiller>(-1, 0, n);
    case CaseKind::Shear:
        return std::make_unique<ShearFiller>(tag.sign, tag.parameter, n);
    case CaseKind::Fourier:
        // S^{+-} = W_0^{-+}
        return std::make_unique<AntiShearFiller>(-tag.sign, 0, n);
    case CaseKind::AntiShear:
        return std::make_unique<AntiShearFiller>(tag.sign, tag.parameter, n);
    case CaseKind::General:
        return make_general(m, n);
    }
    return nullptr;
}

Complex normalization_factor(const ThetaMatrix &m, Normalization norm) {
    if (norm == Normalization::Multiplicative) return 1.0;
    const Complex h = (m.a() == 0 || m.b() == 0) ? Complex(1.0) : h_phase(m.a(), m.b());
    return eighth_root(1) / h;
}

ComplexMatrix build_impl(const ThetaMatrix &m, HilbertDim dim, Normalization norm, bool parallel) {
    const std::int64_t n = dim.value();
    const auto filler = make_filler(m, n);
    ComplexMatrix u(dim.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel && n >= 16)
    for (std::int64_t q = 0; q < n; ++q) filler->fill_row(q, u.row(static_cast<std::size_t>(q)));
    const Complex factor = normalization_factor(m, norm);
    if (factor != Complex(1.0)) u *= factor;
    return u;
}

}  // namespace

ComplexMatrix build(const ThetaMatrix &m, HilbertDim n, Normalization norm) {
    return build_impl(m, n, norm, true);
}

ComplexMatrix build_serial(const ThetaMatrix &m, HilbertDim n, Normalization norm) {
    return build_impl(m, n, norm, false);
}

MultReport verify_mult(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n, double tolerance_scale) {
    MultReport r;
    r.max_entry_error = max_abs_diff(build(a * b, n), build(a, n) * build(b, n));
    r.tolerance = 1e-8 * double(n.value()) * tolerance_scale;
    r.pass = r.max_entry_error < r.tolerance;
    return r;
}

Complex projective_phase(const ThetaMatrix &a, const ThetaMatrix &b, HilbertDim n, Normalization norm) {
    const ComplexMatrix product = build(a, n, norm) * build(b, n, norm);
    const ComplexMatrix direct = build(a * b, n, norm);
    std::size_t best = 0;
    auto pv = product.values();
    for (std::size_t i = 1; i < pv.size(); ++i) {
        if (std::abs(pv[i]) > std::abs(pv[best])) best = i;
    }
    return direct.values()[best] / pv[best];
}

RelationsReport verify_relations(HilbertDim n, double tolerance_scale) {
    const ComplexMatrix p = build(ThetaMatrix(generators::parity), n);
    const ComplexMatrix s = build(ThetaMatrix(generators::S_plus), n);
    const ComplexMatrix t = build(ThetaMatrix(generators::T2_plus), n);
    const ComplexMatrix id = ComplexMatrix::identity(n.size());
    RelationsReport r;
    r.errors[0] = max_abs_diff(p * p, id);
    r.errors[1] = max_abs_diff(s * s * p, id);
    r.errors[2] = max_abs_diff(s * p, p * s);
    r.errors[3] = max_abs_diff(t * p, p * t);
    r.tolerance = 1e-10 * double(n.value()) * tolerance_scale;
    r.pass = true;
    for (double e : r.errors) r.pass = r.pass && e < r.tolerance;
    return r;
}

Complex predicted_delta0_probe(const ThetaMatrix &m, HilbertDim n) {
    if (m.a() == 0 || m.b() == 0) {
        throw Error(ErrorCode::InvalidParity, "probe needs a, b nonzero: " + to_string(m.matrix()));
    }
    const Int g = nt::gcd(m.b(), Int(n.value()));
    const Int n_b = n.value() / g;
    return std::sqrt(g.convert_to<double>()) * h_phase(m.a(), m.b()) *
           GaussClosedForm(n_b * m.a(), m.b() / g)(Int(0));
}

}  // namespace catmap
