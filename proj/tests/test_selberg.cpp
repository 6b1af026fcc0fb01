#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "selberg/selberg_sum.hpp"

using namespace selberg;

namespace {
Poly P(const FieldParams& F, std::initializer_list<int64_t> coeffs) {
    Poly f;
    for (auto v : coeffs) f.c.push_back(F.from_residue(v));
    poly_trim(f);
    return f;
}
Poly family(const FieldParams& F, uint32_t e0, uint32_t e1) {
    return poly_mul(F, poly_pow(F, poly_x(F), e0), poly_pow(F, P(F, {-1, 1}), e1));
}
} // namespace

TEST_CASE("degree zero and negative degree") {
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    Poly r = family(F, 1, 1);
    CHECK(selberg_bruteforce(ctx, r, MulChar{1}, MulChar{2}, 0).value == ctx.ring().one());
    CHECK(selberg_bruteforce(ctx, r, MulChar{1}, MulChar{2}, -1).value.is_zero());
}

TEST_CASE("degree one reduces to a Jacobi sum") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{5, 1}, {7, 1}, {3, 2}}) {
        GaussContext ctx(FieldParams::make(p, e));
        const FieldParams& F = ctx.field();
        for (uint32_t m1 = 1; m1 < F.q() - 1; ++m1)
            for (uint32_t e0 = 1; e0 <= 2; ++e0)
                for (uint32_t e1 = 1; e1 <= 2; ++e1) {
                    MulChar chi1{m1};
                    MulChar psi0 = char_pow(F, chi1, e0), psi1 = char_pow(F, chi1, e1);
                    if (is_trivial(psi0) || is_trivial(psi1)) continue;
                    CycInt got = selberg_bruteforce(ctx, family(F, e0, e1), chi1, trivial_char(), 1).value;
                    CycInt want = jacobi_sum(ctx, psi0, psi1);
                    if (char_at_minus_one(psi1) > 0) want = -want;
                    CHECK(got == want);
                }
    }
}

TEST_CASE("scaling reduction Se(theta r_o^a) = chi1(theta)^i Se(r_o, chi1^a)") {
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    for (uint32_t m1 = 0; m1 < 4; ++m1)
        for (uint32_t m2 = 0; m2 < 4; ++m2)
            for (uint32_t a = 1; a <= 3; ++a)
                for (int64_t th = 2; th <= 3; ++th)
                    for (int i = 0; i <= 3; ++i) {
                        MulChar chi1{m1}, chi2{m2};
                        Poly ro = family(F, 1, 1);
                        Poly r = poly_scale(F, F.from_residue(th), poly_pow(F, ro, a));
                        CycInt lhs = selberg_bruteforce(ctx, r, chi1, chi2, i).value;
                        CycInt rhs = selberg_bruteforce(ctx, ro, char_pow(F, chi1, a), chi2, i).value;
                        rhs = rhs * char_value(F, ctx.ring(), chi1, F.from_residue(th)).pow(i);
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("partition independence: workers 1,2,4,8 agree") {
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    Poly r = family(F, 1, 2);
    SelbergOptions opt;
    opt.threads = 1;
    CycInt base = selberg_bruteforce(ctx, r, MulChar{1}, MulChar{1}, 4, opt).value;
    for (int w : {2, 4, 8}) {
        opt.threads = w;
        CHECK(selberg_bruteforce(ctx, r, MulChar{1}, MulChar{1}, 4, opt).value == base);
    }
}

TEST_CASE("budget enforcement") {
    GaussContext ctx(FieldParams::make(5, 1));
    SelbergOptions opt;
    opt.budget = 100;
    CHECK_THROWS_AS(selberg_bruteforce(ctx, poly_x(ctx.field()), MulChar{1}, MulChar{1}, 4, opt),
                    BudgetExceeded);
}

TEST_CASE("Pellet substitution identity for any chi'") {
    // sum_c chi1(r/c) omega(D) chi'(D) = (-1)^i sum_c mu(c) chi1(r/c) chi'(D)
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    uint64_t N = ctx.N();
    MulChar om = omega_char(F);
    Poly r = family(F, 1, 1);
    for (uint32_t m1 : {0u, 1u, 2u})
        for (uint32_t mp : {0u, 1u, 2u, 3u})
            for (int i = 0; i <= 3; ++i) {
                MulChar chi1{m1}, chip{mp};
                CycInt lhs = ctx.ring().zero();
                Poly c;
                for (uint64_t k = 0; k < monic_count(F, i); ++k) {
                    monic_unrank_into(F, i, k, c);
                    Fq R1 = resultant(F, c, r);
                    Fq D = discriminant(F, c);
                    if (F.is_zero(R1) || F.is_zero(D)) continue;
                    uint64_t z = (*char_zexp(F, N, chi1, R1) + *char_zexp(F, N, om, D) +
                                  *char_zexp(F, N, chip, D)) %
                                 N;
                    lhs = lhs + ctx.ring().zeta((int64_t)z);
                }
                CycInt rhs = selberg_bruteforce(ctx, r, chi1, chip, i).value;
                if (i % 2) rhs = -rhs;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("omega column: squarefree coprime form") {
    // Se(r, chi1, omega, i) = (-1)^i sum over squarefree c coprime to r of chi1(R(c,r))
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    uint64_t N = ctx.N();
    MulChar om = omega_char(F);
    Poly r = family(F, 2, 1);
    for (uint32_t m1 : {0u, 1u, 3u})
        for (int i = 0; i <= 4; ++i) {
            MulChar chi1{m1};
            CycInt acc = ctx.ring().zero();
            Poly c;
            const auto& tbl = ctx.mu_disc(i);
            for (uint64_t k = 0; k < monic_count(F, i); ++k) {
                if (!tbl.mu[k]) continue; // not squarefree
                monic_unrank_into(F, i, k, c);
                Fq R1 = resultant(F, c, r);
                if (F.is_zero(R1)) continue;
                acc = acc + ctx.ring().zeta((int64_t)*char_zexp(F, N, chi1, R1));
            }
            CycInt want = selberg_bruteforce(ctx, r, chi1, om, i).value;
            if (i % 2) want = -want;
            CHECK(acc == want);
        }
}

TEST_CASE("classification metadata") {
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    auto res = selberg_bruteforce(ctx, family(F, 1, 1), omega_char(F), omega_char(F), 1);
    CHECK(res.kase == SeCase::Metaplectic);
    CHECK(res.f0 == 1);
    CHECK(res.f1 == 1);
    auto res2 = selberg_bruteforce(ctx, family(F, 1, 1), MulChar{1}, omega_char(F), 1);
    CHECK(res2.kase == SeCase::NonMetaplectic);
    auto res3 = selberg_bruteforce(ctx, family(F, 1, 1), MulChar{1}, trivial_char(), 1);
    CHECK(res3.kase == SeCase::OrderOne);
    CHECK(res.count_enumerated == 5);
}

TEST_CASE("rational twist matches symbol-by-symbol enumeration") {
    GaussContext ctx(FieldParams::make(5, 1));
    const FieldParams& F = ctx.field();
    uint64_t N = ctx.N();
    RationalFunc r{P(F, {1, 2, 1}), P(F, {3, 1})};
    MulChar chi1{1}, chi2{2};
    SelbergOptions zpol;
    zpol.pole_policy = PolePolicy::ZeroTerm;
    for (int i = 0; i <= 3; ++i) {
        CycInt got = selberg_bruteforce(ctx, r, chi1, chi2, i, zpol).value;
        CycInt want = ctx.ring().zero();
        Poly c;
        const auto& tbl = ctx.mu_disc(i);
        for (uint64_t k = 0; k < monic_count(F, i); ++k) {
            if (!tbl.mu[k]) continue;
            monic_unrank_into(F, i, k, c);
            Fq rn = resultant(F, c, r.num);
            Fq rd = resultant(F, c, r.den);
            if (F.is_zero(rn) || F.is_zero(rd)) continue; // den root 2 is not a root of num
            uint64_t z = (*char_zexp(F, N, chi1, rn) + *char_zexp(F, N, char_inv(F, chi1), rd) +
                          *char_zexp(F, N, chi2, discriminant(F, c))) %
                         N;
            CycInt term = ctx.ring().zeta((int64_t)z);
            want = want + (tbl.mu[k] > 0 ? term : -term);
        }
        CHECK(got == want);
    }
    // pole clash: numerator nonvanishing at the shared root
    RationalFunc clash{P(F, {1}), P(F, {3, 1})};
    CHECK_THROWS_AS(selberg_bruteforce(ctx, clash, chi1, chi2, 2), std::domain_error);
    SelbergOptions zopt;
    zopt.pole_policy = PolePolicy::ZeroTerm;
    CHECK_NOTHROW(selberg_bruteforce(ctx, clash, chi1, chi2, 2, zopt));
}
