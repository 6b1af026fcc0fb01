#include "selberg/chars.hpp"

#include <numeric>

namespace selberg {

MulChar omega_char(const FieldParams& F) { return MulChar{(F.q() - 1) / 2}; }

uint32_t char_order(const FieldParams& F, MulChar chi) {
    uint32_t d = F.q() - 1;
    return d / std::gcd(chi.m, d);
}

bool is_trivial(MulChar chi) { return chi.m == 0; }

MulChar char_mul(const FieldParams& F, MulChar a, MulChar b) { return MulChar{(a.m + b.m) % (F.q() - 1)}; }

MulChar char_pow(const FieldParams& F, MulChar chi, int64_t n) {
    int64_t d = F.q() - 1;
    int64_t m = (int64_t)chi.m % d * (n % d) % d;
    if (m < 0) m += d;
    return MulChar{(uint32_t)m};
}

MulChar char_inv(const FieldParams& F, MulChar chi) { return MulChar{chi.m == 0 ? 0 : F.q() - 1 - chi.m}; }

int char_at_minus_one(MulChar chi) { return (chi.m & 1) ? -1 : 1; }

std::optional<uint64_t> char_zexp(const FieldParams& F, uint64_t N, MulChar chi, Fq x) {
    if (F.is_zero(x)) return std::nullopt;
    return (uint64_t)F.p() * chi.m % N * F.dlog(x) % N;
}

CycInt char_value(const FieldParams& F, const CycRing& ring, MulChar chi, Fq x) {
    auto z = char_zexp(F, ring.N(), chi, x);
    return z ? ring.zeta((int64_t)*z) : ring.zero();
}

uint64_t additive_zexp(const FieldParams& F, uint64_t N, Fq t) {
    return (uint64_t)(F.q() - 1) * F.trace(t) % N;
}

CycInt additive_e(const FieldParams& F, const CycRing& ring, const RationalFunc& f) {
    if (f.den.is_zero()) throw std::domain_error("additive_e: zero denominator");
    Poly s = poly_mod(F, f.num, f.den);
    int d = f.den.deg();
    Fq u = d >= 1 ? F.mul(s.coeff(d - 1), F.inv(f.den.lc())) : F.zero();
    return ring.zeta((int64_t)additive_zexp(F, ring.N(), u));
}

CycInt dirichlet_symbol(const FieldParams& F, const CycRing& ring, MulChar chi, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("dirichlet_symbol: zero modulus");
    return char_value(F, ring, chi, resultant(F, g, f));
}

CycInt dirichlet_symbol(const FieldParams& F, const CycRing& ring, MulChar chi, const RationalFunc& f,
                        const Poly& g) {
    if (g.is_zero()) throw std::domain_error("dirichlet_symbol: zero modulus");
    Fq rn = resultant(F, g, f.num);
    Fq rd = resultant(F, g, f.den);
    if (F.is_zero(rn)) return ring.zero();
    if (F.is_zero(rd)) throw std::domain_error("dirichlet_symbol: pole shares a factor with the modulus");
    auto zn = char_zexp(F, ring.N(), chi, rn);
    auto zd = char_zexp(F, ring.N(), char_inv(F, chi), rd);
    return ring.zeta((int64_t)((*zn + *zd) % ring.N()));
}

CharTriple char_decompose(const FieldParams& F, MulChar chi1, MulChar chi2) {
    uint32_t d = F.q() - 1;
    uint32_t m1 = chi1.m % d;
    uint32_t m2sq = (uint32_t)(2ull * chi2.m % d);
    uint32_t g = std::gcd(std::gcd(m1, m2sq), d); // = d when both are trivial
    CharTriple t;
    t.chi0 = MulChar{g % d};
    t.chi1 = chi1;
    t.chi2 = chi2;
    uint32_t step = d / g;
    t.a = (m1 / g) % step;
    t.b = (m2sq / g) % step;
    t.n = char_order(F, chi2);
    t.n_prime = char_order(F, chi1);
    return t;
}

std::optional<uint32_t> char_subgroup_log(const FieldParams& F, MulChar chi, MulChar psi) {
    uint32_t n = char_order(F, psi);
    MulChar cur = chi;
    for (uint32_t f = 0; f < n; ++f) {
        if (is_trivial(cur)) return f;
        cur = char_mul(F, cur, psi);
    }
    return std::nullopt;
}

} // namespace selberg
