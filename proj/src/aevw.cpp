#include "selberg/aevw.hpp"

namespace selberg {

AevwParams classify(const FieldParams& F, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2) {
    AevwParams par;
    par.e0 = e0;
    par.e1 = e1;
    par.chi1 = chi1;
    par.chi2 = chi2;
    par.n = char_order(F, chi2);
    par.f0 = char_subgroup_log(F, char_pow(F, chi1, e0), chi2);
    par.f1 = char_subgroup_log(F, char_pow(F, chi1, e1), chi2);
    par.metaplectic = par.f0.has_value() && par.f1.has_value();
    return par;
}

CycFrac p_product(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2, uint32_t i) {
    const FieldParams& F = ctx.field();
    const CycRing& R = ctx.ring();
    MulChar psi0 = char_pow(F, chi1, e0);
    MulChar psi1 = char_pow(F, chi1, e1);
    MulChar psi01 = char_pow(F, chi1, (int64_t)e0 + e1);
    CycInt num = R.one();
    for (uint32_t j = 0; j < i; ++j) {
        num = num * ctx.tau(char_mul(F, psi0, char_pow(F, chi2, j)));
        num = num * ctx.tau(char_mul(F, psi1, char_pow(F, chi2, j)));
        num = num * ctx.tau(char_pow(F, chi2, (int64_t)j + 1));
        num = num * ctx.tau(char_mul(F, psi01, char_pow(F, chi2, (int64_t)i - 1 + j))).conj();
    }
    CycInt den = (R.from_int(F.q()) * ctx.tau(chi2)).pow(i);
    return CycFrac(num, den);
}

CycFrac a_factor(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2) {
    const FieldParams& F = ctx.field();
    const CycRing& R = ctx.ring();
    AevwParams par = classify(F, e0, e1, chi1, chi2);
    uint32_t n = par.n;
    CycInt eta_val = char_value(F, R, chi2, F.from_residue(eta_sign((int)n)));
    CycInt tau_n = ctx.tau(chi2).pow(n);
    if (par.metaplectic) {
        // q^{n-2} chi2(eta(n)) / tau(chi2)^n, kept exact for n = 1 as well
        if (n >= 2) {
            mpz_class qp = 1;
            for (uint32_t t = 0; t + 2 < n + 0u; ++t) qp *= F.q();
            return CycFrac(eta_val * qp, tau_n);
        }
        mpz_class qp = F.q(); // n = 1: q^{-1}
        return CycFrac(eta_val, tau_n * qp);
    }
    MulChar a = char_pow(F, chi1, (int64_t)e0 * n);
    MulChar b = char_pow(F, chi1, (int64_t)e1 * n);
    CycInt J = jacobi_sum(ctx, a, b);
    mpz_class qp = 1;
    for (uint32_t t = 0; t + 1 < n; ++t) qp *= F.q();
    return CycFrac(-(J * eta_val * qp), tau_n);
}

mpz_class t_factor(int64_t y, const mpz_class& q) {
    if (y < 0) throw std::invalid_argument("t_factor: y >= 0 required");
    mpz_class acc = -y;
    mpz_class pw = 1; // (-q)^{y-k}, built from k = y downward
    for (int64_t k = y; k >= 0; --k) {
        acc += (2 * k + 1) * pw;
        pw *= -q;
    }
    return acc;
}

mpz_class s_factor(int64_t y, const mpz_class& q) { return 1 - (1 - q) * y; }

CycFrac u_e_eval(const mpz_class& q, const CycFrac& X) {
    const CycRing* R = X.num().ring();
    auto ci = [&](const mpz_class& k) { return CycFrac(R->from_int(k)); };
    CycFrac X2 = X * X;
    return ci(2 * q * q - q) * X2 + ci(1 - 3 * q) * X + ci(1);
}

CycFrac u_o_eval(const mpz_class& q, const CycFrac& X) {
    const CycRing* R = X.num().ring();
    auto ci = [&](const mpz_class& k) { return CycFrac(R->from_int(k)); };
    CycFrac X2 = X * X;
    return ci(q * q) * X2 + ci(q * q - 3 * q) * X + ci(2 - q);
}

MetBranch branch_select(uint32_t i, uint32_t n, uint32_t f0_dir, uint32_t f1_dir) {
    uint32_t k = i % n;
    uint32_t lo = std::min(f0_dir, f1_dir), hi = std::max(f0_dir, f1_dir);
    uint32_t w = (uint32_t)(((int64_t)f0_dir + f1_dir - (int64_t)i + 1) % (int64_t)n + n) % n;
    if (k <= lo && hi < w) return MetBranch::TEven;
    if (w <= lo && hi < k) return MetBranch::TOdd;
    return MetBranch::S;
}

CycFrac closed_form(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2, uint32_t i) {
    const FieldParams& F = ctx.field();
    const CycRing& R = ctx.ring();
    AevwParams par = classify(F, e0, e1, chi1, chi2);
    if (par.n == 1) throw std::domain_error("closed_form: ord(chi2) = 1 is the L-series branch");

    CycFrac P = p_product(ctx, e0, e1, chi1, chi2, i);
    int sign = 1;
    if ((uint64_t)chi1.m * e1 % 2 * (i % 2) % 2) sign = -sign; // chi1(-1)^{e1 i}
    if (i % 2) sign = -sign;                                   // (-1)^i
    if (!par.metaplectic) return sign > 0 ? P : -P;

    // direct-side subgroup logs: chi2^{f} = chi1^{e_j}
    uint32_t f0d = (par.n - *par.f0) % par.n;
    uint32_t f1d = (par.n - *par.f1) % par.n;
    uint32_t m = i / par.n;
    mpz_class q = F.q();
    mpz_class qfloor;
    mpz_pow_ui(qfloor.get_mpz_t(), q.get_mpz_t(), m);
    mpz_class V;
    switch (branch_select(i, par.n, f0d, f1d)) {
        case MetBranch::TEven: V = t_factor(2 * (int64_t)m, q); break;
        case MetBranch::TOdd: V = q * t_factor(2 * (int64_t)m + 1, q); break;
        case MetBranch::S: V = 1 - (q - 1) * (int64_t)m; break;
    }
    CycFrac val = P * CycFrac(R.from_int(qfloor * V));
    return sign > 0 ? val : -val;
}

RationalFn predicted_series(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2,
                            uint32_t i0) {
    const FieldParams& F = ctx.field();
    const CycRing& R = ctx.ring();
    AevwParams par = classify(F, e0, e1, chi1, chi2);
    if (par.n == 1) throw std::domain_error("predicted_series: ord(chi2) = 1 is the L-series branch");
    if (i0 >= par.n) throw std::invalid_argument("predicted_series: 0 <= i0 < n required");

    mpz_class q = F.q();
    CycFrac A = a_factor(ctx, e0, e1, chi1, chi2);
    CycFrac P0 = p_product(ctx, e0, e1, chi1, chi2, i0);
    // sigma = chi1(-1)^{e1 n} (-1)^n; sign_{i0} likewise at i0
    auto pm = [&](uint64_t k) { return k % 2 ? -1 : 1; };
    int sigma = pm((uint64_t)chi1.m * e1 % 2 * (par.n % 2)) * pm(par.n);
    int sign0 = pm((uint64_t)chi1.m * e1 % 2 * (i0 % 2)) * pm(i0);
    CycFrac one(R.one());
    CycFrac head = sign0 > 0 ? P0 : -P0;

    if (!par.metaplectic) {
        CycFrac sA = sigma > 0 ? A : -A; // denominator 1 - sigma A X
        return RationalFn{{head}, {one, -sA}};
    }

    uint32_t f0d = (par.n - *par.f0) % par.n;
    uint32_t f1d = (par.n - *par.f1) % par.n;
    CycFrac Y = CycFrac(R.from_int(q)) * A; // q A, the per-step growth with the branch q-power
    if (sigma < 0) Y = -Y;
    CycFrac q2(R.from_int(q * q));

    RationalFn fn;
    switch (branch_select(i0, par.n, f0d, f1d)) {
        case MetBranch::TEven: {
            // U_e(q, Y X) / ((1 - Y X)^2 (1 - q^2 Y X))
            fn.num = {head * CycFrac(R.from_int(1)), head * CycFrac(R.from_int(1 - 3 * q)) * Y,
                      head * CycFrac(R.from_int(2 * q * q - q)) * Y * Y};
            fn.den = {one, -(CycFrac(R.from_int(q * q + 2)) * Y), (q2 + q2) * Y * Y + Y * Y,
                      -(q2 * Y * Y * Y)};
            break;
        }
        case MetBranch::TOdd: {
            // q U_o(q, Y X) / ((1 - Y X)^2 (1 - q^2 Y X))
            CycFrac qq(R.from_int(q));
            fn.num = {head * qq * CycFrac(R.from_int(2 - q)), head * qq * CycFrac(R.from_int(q * q - 3 * q)) * Y,
                      head * qq * CycFrac(R.from_int(q * q)) * Y * Y};
            fn.den = {one, -(CycFrac(R.from_int(q * q + 2)) * Y), (q2 + q2) * Y * Y + Y * Y,
                      -(q2 * Y * Y * Y)};
            break;
        }
        case MetBranch::S: {
            // (1 - q Y X) / (1 - Y X)^2
            fn.num = {head, -(head * CycFrac(R.from_int(q)) * Y)};
            fn.den = {one, -(Y + Y), Y * Y};
            break;
        }
    }
    return fn;
}

CycFrac vw_lemma2_value(const GaussContext& ctx, const AevwParams& par) {
    if (!par.metaplectic) throw std::invalid_argument("vw_lemma2_value: metaplectic case only");
    const FieldParams& F = ctx.field();
    const CycRing& R = ctx.ring();
    uint32_t s = *par.f0 + *par.f1;
    mpz_class q = F.q();
    // -q^{(f0+f1)_n - 1} chi1(-1)^{f0+f1+1} chi2(eta(f0+f1+1)) tau(chi2^{f0+f1+1}) / tau(chi2)^{f0+f1+1}
    int64_t ex = (int64_t)(s % par.n) - 1;
    CycInt zeta_part = char_value(F, R, par.chi2, F.from_residue(eta_sign((int)s + 1)));
    int sign = -char_at_minus_one(char_pow(F, par.chi1, (int64_t)s + 1));
    CycInt num = ctx.tau(char_pow(F, par.chi2, (int64_t)s + 1)) * zeta_part;
    CycInt den = ctx.tau(par.chi2).pow(s + 1);
    mpz_class qp = 1;
    for (int64_t t = 0; t < (ex >= 0 ? ex : -ex); ++t) qp *= q;
    CycFrac val = ex >= 0 ? CycFrac(num * qp, den) : CycFrac(num, den * qp);
    return sign > 0 ? val : -val;
}

} // namespace selberg
