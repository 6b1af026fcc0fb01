#include "selberg/selberg_sum.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace selberg {

namespace {

// Contiguous-range worker partition with in-order merge; the merge is integer
// vector addition, so any worker count yields identical canonical results.
template <typename Body>
std::vector<int64_t> parallel_counts(uint64_t total, uint64_t N, int threads, const Body& body) {
    int w = std::max(1, threads);
    if (total < 1024) w = 1;
    std::vector<std::vector<int64_t>> partial(w, std::vector<int64_t>(N, 0));
    if (w == 1) {
        body(0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (total + w - 1) / w;
        for (int t = 0; t < w; ++t) {
            uint64_t lo = std::min(total, (uint64_t)t * chunk);
            uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, lo, hi, t] { body(lo, hi, partial[t]); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<int64_t> merged(N, 0);
    for (int t = 0; t < w; ++t)
        for (uint64_t k = 0; k < N; ++k) merged[k] += partial[t][k];
    return merged;
}

// Precomputed factorization of the twist for fast per-term resultants:
// R(c, r) = lc(r)^deg c * prod R(c, pi)^mult, with a Horner fast path for
// linear factors (R(c, x+u) = (-1)^deg c * c(-u)).
struct PreparedTwist {
    Fq unit;
    struct Part {
        Poly pi;
        uint32_t mult;
        bool linear;
        Fq root; // for linear pi = x + u, the root -u
    };
    std::vector<Part> parts;
};

PreparedTwist prepare_twist(const GaussContext& ctx, const Poly& r) {
    const FieldParams& F = ctx.field();
    PreparedTwist out;
    out.unit = r.lc();
    if (r.deg() >= 1) {
        const IrredTable& tbl = ctx.irreducibles(std::max(1, r.deg() / 2));
        for (const auto& [pi, mult] : factor(F, tbl, r).factors) {
            PreparedTwist::Part part;
            part.pi = pi;
            part.mult = mult;
            part.linear = pi.deg() == 1;
            part.root = part.linear ? F.neg(pi.c[0]) : F.zero();
            out.parts.push_back(part);
        }
    }
    return out;
}

Fq twisted_resultant(const FieldParams& F, const PreparedTwist& tw, const Poly& c, int i) {
    Fq acc = F.pow(tw.unit, i);
    for (const auto& part : tw.parts) {
        Fq rp;
        if (part.linear) {
            rp = poly_eval(F, c, part.root);
            if (i & 1) rp = F.neg(rp);
        } else {
            rp = resultant(F, c, part.pi);
        }
        if (F.is_zero(rp)) return F.zero();
        acc = F.mul(acc, F.pow(rp, part.mult));
    }
    return acc;
}

void classify_result(const GaussContext& ctx, const Poly& r_for_class, MulChar chi1, MulChar chi2,
                     SelbergResult& res) {
    const FieldParams& F = ctx.field();
    res.n = char_order(F, chi2);
    res.n_prime = char_order(F, chi1);
    if (res.n == 1) {
        res.kase = SeCase::OrderOne;
        return;
    }
    // AEvW family detection: monic-scaled r = x^{e0} (x-1)^{e1}
    if (r_for_class.deg() >= 1) {
        const IrredTable& tbl = ctx.irreducibles(std::max(1, r_for_class.deg() / 2));
        FactoredPoly fac = factor(F, tbl, r_for_class);
        bool family = true;
        uint32_t e0 = 0, e1 = 0;
        for (const auto& [pi, mult] : fac.factors) {
            if (pi == poly_x(F))
                e0 = mult;
            else if (pi == poly_linear(F, F.neg(F.one())))
                e1 = mult;
            else
                family = false;
        }
        if (family && e0 && e1) {
            res.f0 = char_subgroup_log(F, char_pow(F, chi1, e0), chi2);
            res.f1 = char_subgroup_log(F, char_pow(F, chi1, e1), chi2);
            res.kase = (res.f0 && res.f1) ? SeCase::Metaplectic : SeCase::NonMetaplectic;
            return;
        }
        // general twist: metaplectic when every local character lies in <chi2>
        bool all_in = true;
        for (const auto& [pi, mult] : fac.factors)
            if (!char_subgroup_log(F, char_pow(F, chi1, mult), chi2)) all_in = false;
        res.kase = all_in ? SeCase::Metaplectic : SeCase::NonMetaplectic;
        return;
    }
    res.kase = char_subgroup_log(F, chi1, chi2) ? SeCase::Metaplectic : SeCase::NonMetaplectic;
}

} // namespace

SelbergResult selberg_bruteforce(const GaussContext& ctx, const Poly& r, MulChar chi1, MulChar chi2, int i,
                                 const SelbergOptions& opt) {
    const FieldParams& F = ctx.field();
    if (r.is_zero()) throw std::invalid_argument("selberg_bruteforce: zero twist");
    SelbergResult res;
    res.value = ctx.ring().zero();
    classify_result(ctx, r, chi1, chi2, res);
    if (i < 0) return res;
    uint64_t total = monic_count(F, i);
    if (total > opt.budget) throw BudgetExceeded("selberg_bruteforce: enumeration budget exceeded");
    res.count_enumerated = total;

    const MuDiscTable& tbl = ctx.mu_disc(i);
    PreparedTwist tw = prepare_twist(ctx, r);
    uint64_t N = ctx.N();
    uint64_t m1p = (uint64_t)F.p() * (chi1.m % (F.q() - 1)) % N;
    uint64_t m2p = (uint64_t)F.p() * (chi2.m % (F.q() - 1)) % N;

    auto body = [&](uint64_t lo, uint64_t hi, std::vector<int64_t>& counts) {
        Poly c;
        for (uint64_t k = lo; k < hi; ++k) {
            int8_t mu = tbl.mu[k];
            if (!mu) continue;
            monic_unrank_into(F, i, k, c);
            Fq r1 = twisted_resultant(F, tw, c, i);
            if (F.is_zero(r1)) continue;
            uint64_t z = (m1p * F.dlog(r1) + m2p * (uint64_t)tbl.dlog_disc[k]) % N;
            counts[z] += mu;
        }
    };
    res.value = ctx.ring().from_counts(parallel_counts(total, N, opt.threads, body));
    return res;
}

SelbergResult selberg_bruteforce(const GaussContext& ctx, const RationalFunc& r, MulChar chi1, MulChar chi2,
                                 int i, const SelbergOptions& opt) {
    const FieldParams& F = ctx.field();
    if (r.num.is_zero()) throw std::invalid_argument("selberg_bruteforce: zero twist");
    if (r.den.is_zero()) throw std::invalid_argument("selberg_bruteforce: zero twist denominator");
    if (r.den.deg() == 0) {
        // constant denominator: fold it into the numerator symbol exactly
        SelbergResult res = selberg_bruteforce(ctx, r.num, chi1, chi2, i, opt);
        // chi1^{-1}(den^deg c) is a global unit factor: den constant d, R(c, d) = d^i
        if (i >= 0) {
            auto z = char_zexp(F, ctx.N(), char_inv(F, chi1), F.pow(r.den.c[0], i));
            res.value = res.value * ctx.ring().zeta((int64_t)*z);
        }
        return res;
    }

    SelbergResult res;
    res.value = ctx.ring().zero();
    res.n = char_order(F, chi2);
    res.n_prime = char_order(F, chi1);
    res.kase = res.n == 1 ? SeCase::OrderOne
                          : (char_subgroup_log(F, chi1, chi2) ? SeCase::Metaplectic : SeCase::NonMetaplectic);
    if (i < 0) return res;
    uint64_t total = monic_count(F, i);
    if (total > opt.budget) throw BudgetExceeded("selberg_bruteforce: enumeration budget exceeded");
    res.count_enumerated = total;

    const MuDiscTable& tbl = ctx.mu_disc(i);
    PreparedTwist twn = prepare_twist(ctx, r.num);
    PreparedTwist twd = prepare_twist(ctx, r.den);
    uint64_t N = ctx.N();
    uint64_t m1p = (uint64_t)F.p() * (chi1.m % (F.q() - 1)) % N;
    uint64_t m1p_inv = (uint64_t)F.p() * (char_inv(F, chi1).m % (F.q() - 1)) % N;
    uint64_t m2p = (uint64_t)F.p() * (chi2.m % (F.q() - 1)) % N;

    std::atomic<bool> pole_clash{false};
    auto body = [&](uint64_t lo, uint64_t hi, std::vector<int64_t>& counts) {
        Poly c;
        for (uint64_t k = lo; k < hi; ++k) {
            int8_t mu = tbl.mu[k];
            if (!mu) continue;
            monic_unrank_into(F, i, k, c);
            Fq rn = twisted_resultant(F, twn, c, i);
            Fq rd = twisted_resultant(F, twd, c, i);
            if (F.is_zero(rd)) {
                if (F.is_zero(rn)) continue; // numerator convention wins
                if (opt.pole_policy == PolePolicy::ZeroTerm) continue;
                pole_clash = true;
                return;
            }
            if (F.is_zero(rn)) continue;
            uint64_t z = (m1p * F.dlog(rn) + m1p_inv * F.dlog(rd) + m2p * (uint64_t)tbl.dlog_disc[k]) % N;
            counts[z] += mu;
        }
    };
    auto counts = parallel_counts(total, N, opt.threads, body);
    if (pole_clash)
        throw std::domain_error("selberg_bruteforce: pole of the twist shares a factor with an enumerated c");
    res.value = ctx.ring().from_counts(counts);
    return res;
}

StabilityReport stability_check(const GaussContext& ctx, const Poly& pi, const Poly& r, MulChar chi1,
                                MulChar chi2, int i, const SelbergOptions& opt) {
    const FieldParams& F = ctx.field();
    if (!is_monic(pi) || pi.deg() < 1 || !ctx.irreducibles(std::max(1, pi.deg())).is_irreducible(F, pi))
        throw std::invalid_argument("stability_check: pi must be monic irreducible");
    if (r.is_zero()) throw std::invalid_argument("stability_check: zero twist");

    uint32_t n_prime = char_order(F, chi1);
    Poly pir = poly_mul(F, poly_pow(F, pi, n_prime), r);

    StabilityReport rep;
    rep.divides = poly_mod(F, r, pi).is_zero();
    CycInt se_r = selberg_bruteforce(ctx, r, chi1, chi2, i, opt).value;
    CycInt se_pir = selberg_bruteforce(ctx, pir, chi1, chi2, i, opt).value;

    if (rep.divides) {
        rep.lhs = se_r;
        rep.rhs = se_pir;
        rep.rhs_corrected = se_pir;
        rep.equal_literal = rep.equal_corrected = (se_r == se_pir);
        rep.residual = se_r - se_pir;
        return rep;
    }

    rep.lhs = se_r - se_pir;
    CharTriple tri = char_decompose(F, chi1, chi2);
    uint32_t ord0 = char_order(F, tri.chi0);

    // -chi1(r/pi) chi2(D(pi)) prefactor
    CycInt sym = dirichlet_symbol(F, ctx.ring(), chi1, r, pi);
    CycInt disc = char_value(F, ctx.ring(), chi2, discriminant(F, pi));
    CycInt pref = -(sym * disc);

    auto rhs_for = [&](uint32_t a, uint32_t b) {
        Poly arg = poly_mul(F, poly_pow(F, r, a), poly_pow(F, pi, b));
        CycInt se = selberg_bruteforce(ctx, arg, tri.chi0, chi2, i - pi.deg(), opt).value;
        return pref * se;
    };
    rep.rhs = rhs_for(tri.a, tri.b);
    uint32_t ac = tri.a == 0 ? ord0 : tri.a;
    uint32_t bc = tri.b == 0 ? ord0 : tri.b;
    rep.rhs_corrected = rhs_for(ac, bc);
    rep.equal_literal = rep.lhs == rep.rhs;
    rep.equal_corrected = rep.lhs == rep.rhs_corrected;
    rep.residual = rep.lhs - rep.rhs;
    return rep;
}

Theorem1Report theorem1_check(const GaussContext& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta, const Poly& r,
                              MulChar chi1, MulChar chi2, int i, const SelbergOptions& opt) {
    const FieldParams& F = ctx.field();
    Fq Delta = F.sub(F.mul(alpha, delta), F.mul(beta, gamma));
    if (F.is_zero(Delta)) throw std::invalid_argument("theorem1_check: singular matrix");
    if (r.is_zero()) throw std::invalid_argument("theorem1_check: zero twist");

    CharTriple tri = char_decompose(F, chi1, chi2);
    uint32_t ord0 = char_order(F, tri.chi0);
    uint32_t n = char_order(F, chi2);
    int D = r.deg();

    Theorem1Report rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.gamma = gamma;
    rep.delta = delta;
    rep.Delta = Delta;

    bool affine = F.is_zero(gamma);
    if (!affine) {
        int need = (int)tri.a * D - (int)tri.b * (i - 1) + 1; // M + b(i-1) > a deg r
        int64_t M = 0;
        if (need > 0) M = (int64_t)ord0 * ((need + ord0 - 1) / ord0);
        rep.M = (uint32_t)M;
        rep.M_prime = char_order(F, chi1); // least positive with chi1^{M'} = 1
    }

    // left argument: (sum_j r_j u^j v^{D-j})^a / v^{aD + k(b(i-1)+M)}
    Poly u{{beta, alpha}};
    poly_trim(u);
    Poly v{{delta, gamma}};
    poly_trim(v);
    Poly rhom = poly_zero();
    for (int j = 0; j <= D; ++j) {
        Poly term = poly_mul(F, poly_pow(F, u, j), poly_pow(F, v, D - j));
        rhom = poly_add(F, rhom, poly_scale(F, r.coeff(j), term));
    }
    Poly num = poly_pow(F, rhom, tri.a);
    uint64_t extra = (uint64_t)tri.b * (uint64_t)std::max(i - 1, 0) + rep.M;
    // careful: b(i-1) with i = 0 would be negative in the paper's reading; the
    // checks only run for i >= 1 grids, and i = 0 is handled with max(.,0).
    Poly den_single = poly_pow(F, v, (uint32_t)((uint64_t)tri.a * D + extra));
    Poly den_literal = poly_pow(F, v, (uint32_t)((uint64_t)tri.a * D + 2 * extra));

    SelbergOptions lopt = opt;
    lopt.pole_policy = PolePolicy::ZeroTerm;
    rep.se_left_literal = selberg_bruteforce(ctx, RationalFunc{num, den_literal}, tri.chi0, chi2, i, lopt).value;
    rep.se_left_single = selberg_bruteforce(ctx, RationalFunc{num, den_single}, tri.chi0, chi2, i, lopt).value;

    // right side: Se(r(x) (-gamma x + alpha)^{M'}, chi1, chi2, i)
    Poly lin{{alpha, F.neg(gamma)}};
    poly_trim(lin);
    Poly arg_r = poly_mul(F, r, poly_pow(F, lin, rep.M_prime));
    rep.se_right = selberg_bruteforce(ctx, arg_r, chi1, chi2, i, opt).value;

    auto scaled = [&](const CycInt& left, int64_t t) {
        auto z = char_zexp(F, ctx.N(), char_pow(F, chi2, t), Delta);
        return left * ctx.ring().zeta((int64_t)*z);
    };
    rep.equal_literal = scaled(rep.se_left_literal, 1 - i) == rep.se_right;
    rep.equal_derived = scaled(rep.se_left_single, (int64_t)i * (i - 1)) == rep.se_right;
    for (uint32_t t = 0; t < n; ++t) {
        if (scaled(rep.se_left_literal, t) == rep.se_right) rep.balancing_exponents_literal.push_back(t);
        if (scaled(rep.se_left_single, t) == rep.se_right) rep.balancing_exponents_single.push_back(t);
    }
    return rep;
}

} // namespace selberg
