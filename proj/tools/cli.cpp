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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catmap/hecke.hpp"
#include "catmap/propagator.hpp"
#include "catmap/weyl.hpp"

namespace catmap::cli {

using nlohmann::json;

std::vector<std::int64_t> parse_dims(std::string_view text) {
    auto number = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
            throw Error(ErrorCode::ParseError, "bad dimension '" + std::string(s) + "'");
        }
        if (v < 1) throw Error(ErrorCode::ParseError, "dimension must be >= 1, got " + std::to_string(v));
        return v;
    };
    std::vector<std::int64_t> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        if (const std::size_t dots = item.find(".."); dots != std::string_view::npos) {
            const std::int64_t lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
            if (hi < lo) throw Error(ErrorCode::ParseError, "empty range '" + std::string(item) + "'");
            if (hi - lo > 100000) throw Error(ErrorCode::ParseError, "range too long '" + std::string(item) + "'");
            for (std::int64_t n = lo; n <= hi; ++n) dims.push_back(n);
        } else {
            dims.push_back(number(item));
        }
        start = comma + 1;
    }
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

namespace {

struct Config {
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::size_t max_word_len = 10;
    double tolerance_scale = 1.0;
    std::string format = "text";
    std::string output;
};

json int_json(const Int &x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

json matrix_json(const IntMatrix2 &m) { return json::array({int_json(m.a), int_json(m.b), int_json(m.c), int_json(m.d)}); }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string complex_text(Complex z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

const char *verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// Per-sample seeds derived from the global seed, so every suite is
// reproducible from --seed alone.
std::vector<std::uint64_t> sample_seeds(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> seeds(count);
    for (auto &s : seeds) s = rng();
    return seeds;
}

// Collects one document; rendered as JSON or as the text lines gathered
// alongside.
class Report {
  public:
    explicit Report(const Config &cfg) : cfg_(cfg) {}

    json doc = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }

    int finish(bool pass, std::ostream &out) const {
        std::ofstream file;
        std::ostream *sink = &out;
        if (!cfg_.output.empty()) {
            file.open(cfg_.output);
            if (!file) throw Error(ErrorCode::ParseError, "cannot open output file " + cfg_.output);
            sink = &file;
        }
        if (cfg_.format == "json") {
            *sink << doc.dump(2) << "\n";
        } else {
            for (const auto &l : lines) *sink << l << "\n";
        }
        return pass ? kExitPass : kExitFail;
    }

  private:
    const Config &cfg_;
};

// One row of a per-dimension summary.
struct DimCase {
    std::int64_t n = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::size_t failures = 0;
    std::size_t cases = 0;

    void add(double err, double tol, bool pass) {
        max_error = std::max(max_error, err);
        tolerance = tol;
        failures += pass ? 0 : 1;
        ++cases;
    }
};

bool render_dim_cases(Report &rep, const std::string &suite, const std::vector<DimCase> &rows) {
    bool pass = true;
    json arr = json::array();
    for (const DimCase &r : rows) {
        pass = pass && r.failures == 0;
        arr.push_back({{"N", r.n}, {"cases", r.cases}, {"failures", r.failures}, {"max_error", r.max_error},
                       {"tolerance", r.tolerance}, {"pass", r.failures == 0}});
        rep.line(suite + " N=" + std::to_string(r.n) + " cases=" + std::to_string(r.cases) +
                 " max_error=" + sci(r.max_error) + " tol=" + sci(r.tolerance) + " " + verdict(r.failures == 0));
    }
    rep.doc["suite"] = suite;
    rep.doc["cases"] = arr;
    rep.doc["pass"] = pass;
    rep.line(suite + ": " + verdict(pass));
    return pass;
}

ThetaMatrix theta_arg(const std::string &text) { return ThetaMatrix(parse_matrix(text)); }

// ---- commands ------------------------------------------------------------

int cmd_propagator(const Config &cfg, const std::string &matrix, std::int64_t dim, const std::string &norm,
                   std::ostream &out) {
    const ThetaMatrix a = theta_arg(matrix);
    const HilbertDim n(dim);
    const Normalization mode = norm == "hannay-berry" ? Normalization::HannayBerry : Normalization::Multiplicative;
    const ComplexMatrix u = build(a, n, mode);
    Report rep(cfg);
    json rows = json::array();
    for (std::size_t r = 0; r < u.dim(); ++r) {
        json row = json::array();
        for (Complex z : u.row(r)) row.push_back(complex_json(z));
        rows.push_back(std::move(row));
    }
    rep.doc = {{"N", dim}, {"matrix", rows}, {"case", to_string(classify(a))}, {"A", matrix_json(a.matrix())}};
    if (mode == Normalization::HannayBerry) {
        rep.doc["normalization"] = "hannay-berry";
        rep.doc["note"] = "h(a,b) is taken as 1 when a = 0 or b = 0";
    }
    // the matrix dump is JSON in every format
    Config as_json = cfg;
    as_json.format = "json";
    Report final_rep(as_json);
    final_rep.doc = std::move(rep.doc);
    return final_rep.finish(true, out);
}

int verify_mult(const Config &cfg, const std::vector<std::int64_t> &dims, std::ostream &out) {
    std::vector<DimCase> rows(dims.size());
    const auto seeds = sample_seeds(cfg.seed, 2 * cfg.samples);
    for (std::size_t i = 0; i < dims.size(); ++i) rows[i].n = dims[i];
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const ThetaMatrix a = random_theta(seeds[2 * s], cfg.max_word_len);
        const ThetaMatrix b = random_theta(seeds[2 * s + 1], cfg.max_word_len);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const MultReport r = catmap::verify_mult(a, b, HilbertDim(dims[i]), cfg.tolerance_scale);
            rows[i].add(r.max_entry_error, r.tolerance, r.pass);
        }
    }
    Report rep(cfg);
    return rep.finish(render_dim_cases(rep, "mult", rows), out);
}

int verify_egorov(const Config &cfg, const std::vector<std::int64_t> &dims, std::ostream &out) {
    std::vector<DimCase> rows(dims.size());
    const auto seeds = sample_seeds(cfg.seed, cfg.samples);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        rows[i].n = dims[i];
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const EgorovReport r = verify_egorov_all_modes(random_theta(seeds[s], cfg.max_word_len),
                                                           HilbertDim(dims[i]), cfg.tolerance_scale);
            rows[i].add(r.max_error, r.tolerance, r.pass);
        }
    }
    Report rep(cfg);
    return rep.finish(render_dim_cases(rep, "egorov", rows), out);
}

int verify_mod4n(const Config &cfg, const std::vector<std::int64_t> &dims, std::ostream &out) {
    std::vector<DimCase> rows4(dims.size()), rows2(dims.size());
    std::size_t plus = 0, minus = 0;
    const auto seeds = sample_seeds(cfg.seed, cfg.samples);
    for (std::size_t i = 0; i < dims.size(); ++i) rows4[i].n = rows2[i].n = dims[i];
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const std::size_t i = s % dims.size();
        const std::int64_t n = dims[i];
        const ThetaMatrix a = random_theta(seeds[s], cfg.max_word_len);
        const CongruenceReport c = verify_mod4N(a, congruent_partner(a, 4 * n, seeds[s]), HilbertDim(n),
                                                cfg.tolerance_scale);
        rows4[i].add(c.max_entry_error, c.tolerance, c.pass);
        // alternate plain congruent partners with constructed sign -1 pairs
        std::optional<std::pair<ThetaMatrix, ThetaMatrix>> pair;
        if (s % 2 == 1) pair = find_negative_mod2N_pair(a, HilbertDim(n));
        if (!pair) pair = std::pair{congruent_partner(a, 2 * n, seeds[s] ^ 0x9e3779b97f4a7c15ULL), a};
        const Mod2NReport m = mod2N_factor(pair->first, pair->second, HilbertDim(n), cfg.tolerance_scale);
        rows2[i].add(m.max_entry_error, m.tolerance, m.verified);
        (m.factor == 1 ? plus : minus) += 1;
    }
    Report rep(cfg);
    const bool pass4 = render_dim_cases(rep, "mod4n", rows4);
    const json doc4 = rep.doc;
    const bool pass2 = render_dim_cases(rep, "mod2n", rows2);
    const json doc2 = rep.doc;
    rep.doc = {{"suite", "mod4n"}, {"mod4n", doc4}, {"mod2n", doc2},
               {"mod2n_factor_counts", {{"plus", plus}, {"minus", minus}}}, {"pass", pass4 && pass2}};
    rep.line("mod2n factors: +1 x" + std::to_string(plus) + ", -1 x" + std::to_string(minus));
    return rep.finish(pass4 && pass2, out);
}

int verify_hecke_suite(const Config &cfg, const std::vector<std::int64_t> &dims, std::int64_t max_4n,
                       std::ostream &out) {
    std::vector<DimCase> rows(dims.size());
    std::vector<std::size_t> sizes(dims.size());
    const auto seeds = sample_seeds(cfg.seed, cfg.samples);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        rows[i].n = dims[i];
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const HeckeReport r = verify_hecke(random_theta(seeds[s], cfg.max_word_len), HilbertDim(dims[i]), 0,
                                               seeds[s], cfg.tolerance_scale, max_4n);
            rows[i].add(std::max(r.max_commutator, r.max_pair_commutator), r.tolerance, r.pass);
            sizes[i] = std::max(sizes[i], r.commutant_size);
        }
    }
    Report rep(cfg);
    const bool pass = render_dim_cases(rep, "hecke", rows);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        rep.doc["cases"][i]["max_commutant_size"] = sizes[i];
        rep.line("hecke N=" + std::to_string(dims[i]) + " largest commutant=" + std::to_string(sizes[i]));
    }
    return rep.finish(pass, out);
}

int verify_relations_suite(const Config &cfg, const std::vector<std::int64_t> &dims, std::ostream &out) {
    Report rep(cfg);
    bool pass = true;
    json arr = json::array();
    for (std::int64_t n : dims) {
        const RelationsReport r = verify_relations(HilbertDim(n), cfg.tolerance_scale);
        pass = pass && r.pass;
        json errs = json::object();
        std::string text = "relations N=" + std::to_string(n);
        for (std::size_t k = 0; k < r.errors.size(); ++k) {
            errs[kRelationNames[k]] = r.errors[k];
            text += std::string(" [") + kRelationNames[k] + "] " + sci(r.errors[k]);
        }
        arr.push_back({{"N", n}, {"errors", errs}, {"tolerance", r.tolerance}, {"pass", r.pass}});
        rep.line(text + " " + verdict(r.pass));
    }
    rep.doc = {{"suite", "relations"}, {"cases", arr}, {"pass", pass}};
    rep.line(std::string("relations: ") + verdict(pass));
    return rep.finish(pass, out);
}

int verify_gauss_oracle(const Config &cfg, std::int64_t max_beta, std::ostream &out) {
    const double tol = 1e-9 * cfg.tolerance_scale;
    const double zero_tol = 1e-12 * cfg.tolerance_scale;
    std::size_t compared = 0, vanishing = 0, failures = 0;
    double max_err = 0.0, max_vanishing = 0.0;
    const std::int64_t b = max_beta;
    for (std::int64_t alpha = -b; alpha <= b; ++alpha) {
        for (std::int64_t beta = -b; beta <= b; ++beta) {
            if (beta == 0 || std::gcd(alpha, beta) != 1) continue;
            for (std::int64_t gamma = -b; gamma <= b; ++gamma) {
                const GaussParams p{alpha, beta, gamma};
                const Complex direct = gauss_direct(p);
                if (!is_nonvanishing(p)) {
                    ++vanishing;
                    max_vanishing = std::max(max_vanishing, std::abs(direct));
                    failures += std::abs(direct) < zero_tol ? 0 : 1;
                    continue;
                }
                const bool ae = alpha % 2 == 0, be = beta % 2 == 0, ge = gamma % 2 == 0;
                if (!((ae && !be && ge) || (!ae && be && ge) || (!ae && !be && !ge))) continue;
                const double err = std::abs(gauss_closed(p) - direct);
                ++compared;
                max_err = std::max(max_err, err);
                failures += err < tol ? 0 : 1;
            }
        }
    }
    const bool pass = failures == 0;
    Report rep(cfg);
    rep.doc = {{"suite", "gauss-oracle"}, {"max_beta", max_beta}, {"compared", compared},
               {"max_error", max_err}, {"tolerance", tol}, {"vanishing_cases", vanishing},
               {"max_vanishing_modulus", max_vanishing}, {"vanishing_tolerance", zero_tol},
               {"failures", failures}, {"pass", pass}};
    rep.line("gauss-oracle |alpha|,|beta|,|gamma| <= " + std::to_string(max_beta) + ": compared=" +
             std::to_string(compared) + " max_error=" + sci(max_err) + " tol=" + sci(tol));
    rep.line("gauss-oracle vanishing cases=" + std::to_string(vanishing) + " max_modulus=" + sci(max_vanishing));
    rep.line(std::string("gauss-oracle: ") + verdict(pass));
    return rep.finish(pass, out);
}

int cmd_decompose(const Config &cfg, const std::string &matrix, std::ostream &out) {
    const ThetaMatrix a = theta_arg(matrix);
    const GeneratorWord word = decompose(a);
    const bool round_trip = evaluate(word) == a;
    Report rep(cfg);
    rep.doc = {{"A", matrix_json(a.matrix())}, {"word", to_string(word)}, {"length", word.size()},
               {"round_trip", round_trip}};
    rep.line(to_string(word));
    if (!round_trip) rep.line("round trip FAILED");
    return rep.finish(round_trip, out);
}

int cmd_evaluate(const Config &cfg, const std::vector<std::string> &tokens, std::ostream &out) {
    std::string text;
    for (const auto &t : tokens) text += (text.empty() ? "" : " ") + t;
    const GeneratorWord word = parse_word(text);
    const ThetaMatrix a = evaluate(word);
    Report rep(cfg);
    rep.doc = {{"word", to_string(word)}, {"A", matrix_json(a.matrix())}};
    rep.line(to_string(a.matrix()));
    return rep.finish(true, out);
}

int cmd_gauss(const Config &cfg, const std::string &alpha, const std::string &beta, const std::string &gamma,
              const std::string &method, std::ostream &out) {
    auto to_int = [](const std::string &s) {
        try {
            return Int(s);
        } catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
        }
    };
    const GaussParams p{to_int(alpha), to_int(beta), to_int(gamma)};
    Report rep(cfg);
    rep.doc = {{"alpha", int_json(p.alpha)}, {"beta", int_json(p.beta)}, {"gamma", int_json(p.gamma)}};
    std::optional<Complex> direct, closed;
    if (method != "closed") {
        direct = gauss_direct(p);
        rep.doc["direct"] = complex_json(*direct);
        rep.line("direct: " + complex_text(*direct));
    }
    if (method != "direct") {
        closed = gauss_closed(p);
        rep.doc["closed"] = complex_json(*closed);
        rep.line("closed: " + complex_text(*closed));
    }
    bool pass = true;
    if (direct && closed) {
        const double diff = std::abs(*direct - *closed);
        pass = diff < 1e-9 * cfg.tolerance_scale;
        rep.doc["abs_diff"] = diff;
        rep.doc["pass"] = pass;
        rep.line("abs_diff: " + sci(diff) + " " + verdict(pass));
    }
    return rep.finish(pass, out);
}

int cmd_hecke(const Config &cfg, const std::string &matrix, std::int64_t dim, std::int64_t max_4n,
              std::size_t check, std::ostream &out) {
    const ThetaMatrix a = theta_arg(matrix);
    const HeckeReport r = verify_hecke(a, HilbertDim(dim), check, cfg.seed, cfg.tolerance_scale, max_4n);
    Report rep(cfg);
    json lifts = json::array();
    for (const auto &l : r.sample_lifts) lifts.push_back(matrix_json(l.matrix()));
    rep.doc = {{"A", matrix_json(a.matrix())}, {"N", dim}, {"commutant_size", r.commutant_size},
               {"checked", r.checked}, {"pairs_checked", r.pairs_checked}, {"max_commutator", r.max_commutator},
               {"max_pair_commutator", r.max_pair_commutator}, {"tolerance", r.tolerance},
               {"sample_lifts", lifts}, {"pass", r.pass}};
    rep.line("commutant size mod " + std::to_string(4 * dim) + ": " + std::to_string(r.commutant_size));
    for (const auto &l : r.sample_lifts) rep.line("  lift " + to_string(l.matrix()));
    rep.line("checked " + std::to_string(r.checked) + " lifts, " + std::to_string(r.pairs_checked) +
             " pairs; max commutator " + sci(std::max(r.max_commutator, r.max_pair_commutator)) + " tol " +
             sci(r.tolerance) + " " + verdict(r.pass));
    return rep.finish(r.pass, out);
}

int cmd_egorov(const Config &cfg, const std::string &matrix, std::int64_t dim, const std::string &mode,
               std::ostream &out) {
    const ThetaMatrix a = theta_arg(matrix);
    const HilbertDim n(dim);
    EgorovReport r;
    if (!mode.empty()) {
        const auto comma = mode.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--mode expects m1,m2");
        WeylIndex m;
        try {
            m = {Int(mode.substr(0, comma)), Int(mode.substr(comma + 1))};
        } catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "bad --mode '" + mode + "'");
        }
        r = verify_egorov(a, n, Observable::mode(m), cfg.tolerance_scale);
        r.modes.push_back({m, r.max_error});
    } else {
        r = verify_egorov_all_modes(a, n, cfg.tolerance_scale);
    }
    Report rep(cfg);
    json modes = json::array();
    for (const auto &me : r.modes) {
        modes.push_back({{"mode", {int_json(me.mode.n1), int_json(me.mode.n2)}}, {"error", me.error}});
        rep.line("mode " + to_string(me.mode) + " error " + sci(me.error));
    }
    rep.doc = {{"A", matrix_json(a.matrix())}, {"N", dim}, {"modes", modes}, {"max_error", r.max_error},
               {"tolerance", r.tolerance}, {"pass", r.pass}};
    rep.line("max error " + sci(r.max_error) + " tol " + sci(r.tolerance) + " " + verdict(r.pass));
    return rep.finish(r.pass, out);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum cat map propagators on the theta group", "catmap"};
    app.fallthrough();
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--seed", cfg.seed, "seed for every randomized command");
    app.add_option("--samples", cfg.samples, "number of random samples")->check(CLI::PositiveNumber);
    app.add_option("--max-word-len", cfg.max_word_len, "maximum generator word length of random matrices")
        ->check(CLI::PositiveNumber);
    app.add_option("--tolerance-scale", cfg.tolerance_scale, "multiplies every tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", cfg.output, "write the output to this file");

    std::string matrix, norm = "multiplicative", mode, method = "both", alpha, beta, gamma, dims_text;
    std::int64_t dim = 0, max_beta = 40, max_4n = kDefaultMax4N;
    std::size_t check = 0;
    std::vector<std::string> word_tokens;

    auto *prop = app.add_subcommand("propagator", "dump U_N(A) as JSON");
    prop->add_option("--matrix", matrix, "a,b,c,d")->required();
    prop->add_option("--dim", dim, "N")->required();
    prop->add_option("--normalization", norm)->check(CLI::IsMember({"multiplicative", "hannay-berry"}));

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->add_option("--dims", dims_text, "N values: 5, 1,2,3 or lo..hi");
    verify->add_option("--dim", dim, "single N (shorthand for --dims N)");
    auto *v_mult = verify->add_subcommand("mult", "U(AB) = U(A) U(B) on random pairs");
    auto *v_egorov = verify->add_subcommand("egorov", "exact Egorov on all Weyl modes");
    auto *v_mod4n = verify->add_subcommand("mod4n", "dependence on A mod 4N and the mod 2N sign");
    auto *v_hecke = verify->add_subcommand("hecke", "commutation with lifted mod-4N commutants");
    v_hecke->add_option("--max-4n", max_4n, "enumeration cap on 4N");
    auto *v_rel = verify->add_subcommand("relations", "the four generator relations");
    auto *v_gauss = verify->add_subcommand("gauss-oracle", "closed form against direct summation");
    v_gauss->add_option("--max-beta", max_beta, "bound on |alpha|, |beta|, |gamma|")->check(CLI::PositiveNumber);

    auto *dec = app.add_subcommand("decompose", "write A as a generator word");
    dec->add_option("--matrix", matrix, "a,b,c,d")->required();

    auto *ev = app.add_subcommand("evaluate", "multiply out a generator word");
    ev->add_option("word", word_tokens, "tokens S S- P T2 T2-")->required();

    auto *gs = app.add_subcommand("gauss", "evaluate a Gauss sum");
    gs->add_option("--alpha", alpha)->required();
    gs->add_option("--beta", beta)->required();
    gs->add_option("--gamma", gamma)->required();
    gs->add_option("--method", method)->check(CLI::IsMember({"direct", "closed", "both"}));

    auto *hk = app.add_subcommand("hecke", "mod-4N commutant of A and its commutation check");
    hk->add_option("--matrix", matrix, "a,b,c,d")->required();
    hk->add_option("--dim", dim, "N")->required();
    hk->add_option("--max-4n", max_4n, "enumeration cap on 4N");
    hk->add_option("--check", check, "number of members to lift and check (0 = all)");

    auto *eg = app.add_subcommand("egorov", "conjugate Weyl modes by U_N(A)");
    eg->add_option("--matrix", matrix, "a,b,c,d")->required();
    eg->add_option("--dim", dim, "N")->required();
    eg->add_option("--mode", mode, "single mode m1,m2 (default: all modes in [0,N)^2)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        auto dims_or = [&](const char *fallback) {
            if (!dims_text.empty()) return parse_dims(dims_text);
            if (dim != 0) return parse_dims(std::to_string(dim));
            return parse_dims(fallback);
        };
        if (*prop) return cmd_propagator(cfg, matrix, dim, norm, out);
        if (*v_mult) return verify_mult(cfg, dims_or("1..16"), out);
        if (*v_egorov) return verify_egorov(cfg, dims_or("1..8"), out);
        if (*v_mod4n) return verify_mod4n(cfg, dims_or("1..16"), out);
        if (*v_hecke) return verify_hecke_suite(cfg, dims_or("1..4"), max_4n, out);
        if (*v_rel) return verify_relations_suite(cfg, dims_or("1..64"), out);
        if (*v_gauss) return verify_gauss_oracle(cfg, max_beta, out);
        if (*dec) return cmd_decompose(cfg, matrix, out);
        if (*ev) return cmd_evaluate(cfg, word_tokens, out);
        if (*gs) return cmd_gauss(cfg, alpha, beta, gamma, method, out);
        if (*hk) return cmd_hecke(cfg, matrix, dim, max_4n, check, out);
        if (*eg) return cmd_egorov(cfg, matrix, dim, mode, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        // a lift that cannot be found is a failed check, not bad input
        return e.code() == ErrorCode::LiftFailure ? kExitFail : kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace catmap::cli
