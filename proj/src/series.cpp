#include "selberg/series.hpp"

#include <algorithm>
#include <cmath>

namespace selberg {

PowerSeriesWindow series_coeffs(const GaussContext& ctx, const Poly& r, MulChar chi1, MulChar chi2, int i0,
                                int count, const SelbergOptions& opt) {
    if (count < 1) throw std::invalid_argument("series_coeffs: count >= 1 required");
    PowerSeriesWindow w;
    w.i0 = i0;
    w.n = char_order(ctx.field(), chi2);
    w.coeffs.reserve(count);
    for (int l = 0; l < count; ++l)
        w.coeffs.push_back(selberg_bruteforce(ctx, r, chi1, chi2, i0 + (int)(l * w.n), opt).value);
    return w;
}

namespace {

// Gaussian elimination over the CycFrac field; returns a particular solution
// (free variables zero) or nullopt when inconsistent.
std::optional<std::vector<CycFrac>> solve_linear(std::vector<std::vector<CycFrac>> M,
                                                 std::vector<CycFrac> rhs) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && M[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[rank]);
        std::swap(rhs[sel], rhs[rank]);
        CycFrac inv = M[rank][col].inv();
        for (size_t c = col; c < cols; ++c) M[rank][c] = M[rank][c] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || M[rr][col].is_zero()) continue;
            CycFrac f = M[rr][col];
            for (size_t c = col; c < cols; ++c) M[rr][c] = M[rr][c] - f * M[rank][c];
            rhs[rr] = rhs[rr] - f * rhs[rank];
        }
        pivot_col[rank] = (int)col;
        ++rank;
    }
    for (size_t rr = rank; rr < rows; ++rr)
        if (!rhs[rr].is_zero()) return std::nullopt;
    const CycRing* R = rhs.empty() ? nullptr : rhs[0].num().ring();
    if (!R) throw std::logic_error("solve_linear: empty system");
    std::vector<CycFrac> sol(cols, CycFrac(R->zero(), R->one()));
    for (size_t rr = 0; rr < rank; ++rr) sol[pivot_col[rr]] = rhs[rr];
    return sol;
}

} // namespace

std::optional<RationalFn> rational_reconstruct(const std::vector<CycFrac>& s, int dmax_num, int dmax_den) {
    int L = (int)s.size();
    if (L < dmax_num + dmax_den + 2)
        throw std::invalid_argument("rational_reconstruct: window too short for the requested degrees");
    const CycRing* R = s[0].num().ring();
    CycFrac zero(R->zero(), R->one());
    CycFrac one(R->one(), R->one());

    // den_0 = 1; unknowns den_1..den_dd from sum_j den_j s_{t-j} = 0, t > dmax_num
    int dd = dmax_den;
    std::vector<std::vector<CycFrac>> M;
    std::vector<CycFrac> rhs;
    for (int t = dmax_num + 1; t < L; ++t) {
        std::vector<CycFrac> row(dd, zero);
        for (int j = 1; j <= dd; ++j) row[j - 1] = (t - j >= 0) ? s[t - j] : zero;
        M.push_back(std::move(row));
        rhs.push_back(-s[t]);
    }
    auto den_sol = solve_linear(std::move(M), std::move(rhs));
    if (!den_sol) return std::nullopt;

    RationalFn fn;
    fn.den.push_back(one);
    for (int j = 0; j < dd; ++j) fn.den.push_back((*den_sol)[j]);
    for (int t = 0; t <= dmax_num && t < L; ++t) {
        CycFrac acc = zero;
        for (int j = 0; j <= std::min(t, dd); ++j) acc = acc + fn.den[j] * s[t - j];
        fn.num.push_back(acc);
    }
    // validation: expansion must reproduce every input coefficient
    auto expand = taylor(fn, L);
    for (int t = 0; t < L; ++t)
        if (!(expand[t] == s[t])) return std::nullopt;
    // trim trailing zero coefficients
    while (fn.num.size() > 1 && fn.num.back().is_zero()) fn.num.pop_back();
    while (fn.den.size() > 1 && fn.den.back().is_zero()) fn.den.pop_back();
    return fn;
}

std::vector<CycFrac> taylor(const RationalFn& fn, int count) {
    if (fn.den.empty() || fn.den[0].is_zero())
        throw std::invalid_argument("taylor: denominator constant term must be invertible");
    const CycRing* R = fn.den[0].num().ring();
    CycFrac zero(R->zero(), R->one());
    CycFrac inv0 = fn.den[0].inv();
    std::vector<CycFrac> out;
    out.reserve(count);
    for (int t = 0; t < count; ++t) {
        CycFrac acc = (t < (int)fn.num.size()) ? fn.num[t] : zero;
        for (int j = 1; j <= t && j < (int)fn.den.size(); ++j) acc = acc - fn.den[j] * out[t - j];
        out.push_back(acc * inv0);
    }
    return out;
}

std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
    int d = (int)c.size() - 1;
    std::vector<std::complex<double>> roots;
    if (d < 1) return roots;
    for (auto& x : c) x /= c.back();
    roots.resize(d);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1, 0);
    for (int k = 0; k < d; ++k) {
        roots[k] = w;
        w *= seed;
        w += std::complex<double>(0.11, 0.07); // spread the initial guesses
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int j = d; j >= 0; --j) acc = acc * z + c[j];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double shift = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> numv = eval(roots[k]);
            std::complex<double> denv = 1;
            for (int j = 0; j < d; ++j)
                if (j != k) denv *= roots[k] - roots[j];
            std::complex<double> delta = numv / denv;
            roots[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        if (std::abs(std::abs(a) - std::abs(b)) > 1e-12) return std::abs(a) < std::abs(b);
        if (std::abs(a.real() - b.real()) > 1e-12) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<Singularity> singularity_report(const RationalFn& fn, uint64_t sigma) {
    if (fn.den.size() < 2) throw std::invalid_argument("singularity_report: constant denominator");
    std::vector<std::complex<double>> dc;
    for (const auto& x : fn.den) dc.push_back(x.embed(sigma));
    // exact trailing-zero trim first (embedding noise must not create roots)
    size_t real_deg = fn.den.size();
    while (real_deg > 1 && fn.den[real_deg - 1].is_zero()) --real_deg;
    dc.resize(real_deg);
    auto roots = complex_roots(dc);
    std::vector<Singularity> out;
    for (auto z : roots) {
        bool merged = false;
        for (auto& s : out) {
            if (std::abs(s.root - z) < 1e-6 * std::max(1.0, std::abs(z))) {
                s.root = (s.root * (double)s.multiplicity + z) / (double)(s.multiplicity + 1);
                s.multiplicity += 1;
                s.magnitude = std::abs(s.root);
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({z, std::abs(z), 1});
    }
    return out;
}

LseriesReport lseries_analyze(const GaussContext& ctx, const Poly& r, MulChar chi1, int extra_terms,
                              const SelbergOptions& opt) {
    const FieldParams& F = ctx.field();
    if (r.is_zero()) throw std::invalid_argument("lseries_analyze: zero twist");
    LseriesReport rep;
    rep.r = r;
    rep.chi1 = chi1;
    rep.n_prime = char_order(F, chi1);

    const IrredTable& tbl = ctx.irreducibles(std::max(1, r.deg()));
    rep.conductor = conductor_support(F, tbl, r, rep.n_prime);
    rep.modulus_rad = poly_one(F);
    if (r.deg() >= 1)
        for (const auto& [pi, mult] : factor(F, tbl, r).factors) rep.modulus_rad = poly_mul(F, rep.modulus_rad, pi);
    rep.principal = rep.conductor.deg() == 0;
    rep.has_trivial_zero = (uint64_t)r.deg() % rep.n_prime == 0;

    int len = rep.modulus_rad.deg() + extra_terms;
    uint64_t N = ctx.N();
    for (int i = 0; i < len; ++i) {
        uint64_t total = monic_count(F, i);
        if (total > opt.budget) break;
        std::vector<int64_t> counts(N, 0);
        Poly c;
        for (uint64_t k = 0; k < total; ++k) {
            monic_unrank_into(F, i, k, c);
            Fq sym = resultant(F, c, r);
            if (F.is_zero(sym)) continue;
            counts[*char_zexp(F, N, chi1, sym)] += 1;
        }
        rep.a_coeffs.push_back(ctx.ring().from_counts(counts));
        rep.b_coeffs.push_back(selberg_bruteforce(ctx, r, chi1, trivial_char(), i, opt).value);
    }

    // first index from which the a-sequence vanishes through the window
    int v = (int)rep.a_coeffs.size();
    while (v > 0 && rep.a_coeffs[v - 1].is_zero()) --v;
    rep.observed_a_vanish_from = v < (int)rep.a_coeffs.size() ? v : -1;

    // (sum a T^i)(sum b T^i) = 1 as far as computable
    rep.product_is_one = true;
    for (size_t t = 0; t < rep.a_coeffs.size(); ++t) {
        CycInt acc = ctx.ring().zero();
        for (size_t j = 0; j <= t; ++j) acc = acc + rep.a_coeffs[j] * rep.b_coeffs[t - j];
        if (t == 0 ? !(acc == ctx.ring().one()) : !acc.is_zero()) rep.product_is_one = false;
    }

    if (!rep.principal) {
        std::vector<std::complex<double>> ac;
        size_t adeg = rep.a_coeffs.size();
        while (adeg > 1 && rep.a_coeffs[adeg - 1].is_zero()) --adeg;
        for (size_t j = 0; j < adeg; ++j) ac.push_back(rep.a_coeffs[j].embed());
        auto roots = complex_roots(ac);
        rep.weil_all_sqrt_q = !roots.empty();
        double sq = std::sqrt((double)F.q());
        for (auto z : roots) {
            std::complex<double> invroot = 1.0 / z;
            rep.inverse_roots.push_back(invroot);
            if (std::abs(std::abs(invroot) - sq) > 1e-6) rep.weil_all_sqrt_q = false;
        }
    } else {
        // candidates: (1-qT) prod_{pi | rad r}(1 - T^{deg pi}) vs the quotient form
        std::vector<mpz_class> prod = {1};
        auto mul_factor = [&](int dpi, int sign) {
            std::vector<mpz_class> nxt(prod.size() + dpi, 0);
            for (size_t j = 0; j < prod.size(); ++j) {
                nxt[j] += prod[j];
                nxt[j + dpi] += sign * prod[j];
            }
            prod = std::move(nxt);
        };
        std::vector<int> prime_degs;
        if (r.deg() >= 1)
            for (const auto& [pi, mult] : factor(F, tbl, r).factors) prime_degs.push_back(pi.deg());
        // product form
        std::vector<mpz_class> product_form = {1, -mpz_class(F.q())};
        for (int dpi : prime_degs) {
            prod = product_form;
            mul_factor(dpi, -1);
            product_form = prod;
        }
        // quotient form coefficients by series division
        std::vector<mpz_class> quot(rep.b_coeffs.size(), 0);
        {
            std::vector<mpz_class> denp = {1};
            prod = denp;
            for (int dpi : prime_degs) mul_factor(dpi, -1);
            denp = prod;
            std::vector<mpz_class> nump = {1, -mpz_class(F.q())};
            for (size_t t = 0; t < quot.size(); ++t) {
                mpz_class acc = t < nump.size() ? nump[t] : mpz_class(0);
                for (size_t j = 1; j <= t && j < denp.size(); ++j) acc -= denp[j] * quot[t - j];
                quot[t] = acc; // denp[0] = 1
            }
        }
        bool match_prod = true, match_quot = true;
        for (size_t t = 0; t < rep.b_coeffs.size(); ++t) {
            mpz_class pf = t < product_form.size() ? product_form[t] : mpz_class(0);
            if (!(rep.b_coeffs[t] == ctx.ring().from_int(pf))) match_prod = false;
            if (!(rep.b_coeffs[t] == ctx.ring().from_int(quot[t]))) match_quot = false;
        }
        rep.principal_b_match =
            match_prod && match_quot ? "both" : (match_prod ? "product" : (match_quot ? "quotient" : "neither"));
    }
    return rep;
}

} // namespace selberg
