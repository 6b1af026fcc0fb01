#include "selberg/sums.hpp"

#include <algorithm>
#include <sstream>

namespace selberg {

GaussContext::GaussContext(FieldParams F) : F_(std::move(F)) {
    ring_ = CycRing::make((uint64_t)F_.p() * (F_.q() - 1));
    tau_.resize(F_.q() - 1);
}

const CycInt& GaussContext::tau(MulChar chi) const {
    uint32_t m = chi.m % (F_.q() - 1);
    std::lock_guard<std::mutex> lock(mu_);
    if (!tau_[m]) {
        uint64_t N = ring_->N();
        std::vector<int64_t> counts(N, 0);
        for (uint32_t k = 0; k + 1 < F_.q(); ++k) {
            Fq a = F_.exp_g(k);
            uint64_t z = ((uint64_t)F_.p() * m % N * k + additive_zexp(F_, N, a)) % N;
            counts[z] += 1;
        }
        tau_[m] = std::make_unique<CycInt>(ring_->from_counts(counts));
    }
    return *tau_[m];
}

const IrredTable& GaussContext::irreducibles(int max_deg) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (irred_.empty() || irred_.back()->max_deg() < max_deg)
        irred_.push_back(std::make_unique<IrredTable>(F_, max_deg));
    return *irred_.back();
}

const MuDiscTable& GaussContext::mu_disc(int deg) const {
    const IrredTable& itbl = irreducibles(std::max(1, deg / 2));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mu_disc_.find(deg);
    if (it != mu_disc_.end()) return *it->second;

    auto tbl = std::make_unique<MuDiscTable>();
    uint64_t total = monic_count(F_, deg);
    tbl->mu.resize(total);
    tbl->dlog_disc.resize(total);
    Poly c;
    for (uint64_t k = 0; k < total; ++k) {
        monic_unrank_into(F_, deg, k, c);
        Fq D = discriminant(F_, c);
        if (F_.is_zero(D)) {
            tbl->mu[k] = 0;
            tbl->dlog_disc[k] = -1;
        } else {
            tbl->mu[k] = (int8_t)mobius(F_, itbl, c);
            tbl->dlog_disc[k] = (int32_t)F_.dlog(D);
        }
    }
    auto& ref = *tbl;
    mu_disc_.emplace(deg, std::move(tbl));
    return ref;
}

const CycInt& gauss_sum(const GaussContext& ctx, MulChar chi) { return ctx.tau(chi); }

CycInt jacobi_sum(const GaussContext& ctx, MulChar chi1, MulChar chi2) {
    const FieldParams& F = ctx.field();
    uint64_t N = ctx.N();
    std::vector<int64_t> counts(N, 0);
    for (uint32_t code = 0; code < F.q(); ++code) {
        Fq a{code};
        if (F.is_zero(a) || a == F.one()) continue;
        auto z1 = char_zexp(F, N, chi1, a);
        auto z2 = char_zexp(F, N, chi2, F.sub(F.one(), a));
        counts[(*z1 + *z2) % N] += 1;
    }
    return ctx.ring().from_counts(counts);
}

CycInt global_gauss(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c) {
    if (c.is_zero()) throw std::domain_error("global_gauss: zero modulus");
    if (r.is_zero()) throw std::domain_error("global_gauss: zero twist");
    const FieldParams& F = ctx.field();
    uint64_t N = ctx.N();
    int len = c.deg();
    if (len == 0) return ctx.ring().one(); // single residue d = 0, symbol chi(1), e(0)
    uint64_t total = monic_count(F, len);  // q^deg c residues
    std::vector<int64_t> counts(N, 0);
    for (uint64_t k = 0; k < total; ++k) {
        Poly d = residue_unrank(F, len, k);
        Fq sym = resultant(F, c, d);
        if (F.is_zero(sym)) continue;
        auto zs = char_zexp(F, N, chi, sym);
        Poly rd = poly_mul(F, r, d);
        Poly s = poly_mod(F, rd, c);
        Fq u = F.mul(s.coeff(len - 1), F.inv(c.lc()));
        uint64_t z = (*zs + additive_zexp(F, N, u)) % N;
        counts[z] += 1;
    }
    return ctx.ring().from_counts(counts);
}

CycInt dh_evaluate(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c) {
    const FieldParams& F = ctx.field();
    if (!is_monic(c)) throw std::invalid_argument("dh_evaluate: monic modulus required");
    if (poly_gcd(F, r, c).deg() != 0) throw std::invalid_argument("dh_evaluate: r and c must be coprime");
    int d = c.deg();
    if (d == 0) return ctx.ring().one();
    const IrredTable& tbl = ctx.irreducibles(std::max(1, d / 2));
    int mu = mobius(F, tbl, c);
    if (mu == 0) return ctx.ring().zero();
    // chi^{-1}(r/c) * chi(c'/c)
    Fq rc = resultant(F, c, r);
    Fq cc = resultant(F, c, poly_derivative(F, c));
    auto z1 = char_zexp(F, ctx.N(), char_inv(F, chi), rc);
    auto z2 = char_zexp(F, ctx.N(), chi, cc);
    CycInt unit = ctx.ring().zeta((int64_t)((*z1 + *z2) % ctx.N()));
    CycInt tpow = ctx.tau(chi).pow((uint64_t)d);
    CycInt val = unit * tpow;
    bool neg = (d & 1) != 0; // (-tau)^d
    if ((mu < 0) != neg) return -val;
    return val;
}

CycInt dh_evaluate_disc_form(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c) {
    const FieldParams& F = ctx.field();
    if (!is_monic(c)) throw std::invalid_argument("dh_evaluate: monic modulus required");
    if (poly_gcd(F, r, c).deg() != 0) throw std::invalid_argument("dh_evaluate: r and c must be coprime");
    int d = c.deg();
    if (d == 0) return ctx.ring().one();
    const IrredTable& tbl = ctx.irreducibles(std::max(1, d / 2));
    int mu = mobius(F, tbl, c);
    if (mu == 0) return ctx.ring().zero();
    Fq rc = resultant(F, c, r);
    Fq D = discriminant(F, c);
    Fq etaval = F.from_residue(eta_sign(d));
    auto z1 = char_zexp(F, ctx.N(), char_inv(F, chi), rc);
    auto z2 = char_zexp(F, ctx.N(), chi, D);
    auto z3 = char_zexp(F, ctx.N(), chi, etaval);
    CycInt unit = ctx.ring().zeta((int64_t)((*z1 + *z2 + *z3) % ctx.N()));
    CycInt val = unit * ctx.tau(chi).pow((uint64_t)d);
    bool neg = (d & 1) != 0;
    if ((mu < 0) != neg) return -val;
    return val;
}

CycInt dh_quadratic(const GaussContext& ctx, const Poly& c) {
    const FieldParams& F = ctx.field();
    if (!is_monic(c)) throw std::invalid_argument("dh_quadratic: monic modulus required");
    int d = c.deg();
    if (d == 0) return ctx.ring().one();
    const IrredTable& tbl = ctx.irreducibles(std::max(1, d / 2));
    int mu = mobius(F, tbl, c);
    if (mu == 0) return ctx.ring().zero();
    MulChar om = omega_char(F);
    auto z = char_zexp(F, ctx.N(), om, F.from_residue(eta_sign(d)));
    return ctx.ring().zeta((int64_t)*z) * ctx.tau(om).pow((uint64_t)d);
}

AndersonReport anderson_identity_check(const GaussContext& ctx, const Poly& f, MulChar chi) {
    const FieldParams& F = ctx.field();
    if (!is_monic(f)) throw std::invalid_argument("anderson_identity_check: monic f required");
    uint32_t n = char_order(F, chi);
    const IrredTable& tbl = ctx.irreducibles(std::max(1, f.deg()));
    Poly f_o = conductor_support(F, tbl, f, n);
    if (f_o.deg() < 1)
        throw std::invalid_argument("anderson_identity_check: conductor support is 1 (principal symbol)");

    AndersonReport rep;
    rep.f = f;
    rep.chi = chi;
    rep.f_o = f_o;

    // lhs: brute-force coefficient sum
    uint64_t N = ctx.N();
    int gd = f_o.deg() - 1;
    std::vector<int64_t> counts(N, 0);
    for (uint64_t k = 0; k < monic_count(F, gd); ++k) {
        Poly g = monic_unrank(F, gd, k);
        Fq sym = resultant(F, g, f);
        if (F.is_zero(sym)) continue;
        counts[*char_zexp(F, N, chi, sym)] += 1;
    }
    rep.lhs = ctx.ring().from_counts(counts);

    // rhs pieces
    MulChar om = omega_char(F);
    CycInt wd = char_value(F, ctx.ring(), om, discriminant(F, f_o));
    CycInt sym_fp = dirichlet_symbol(F, ctx.ring(), chi, f, poly_derivative(F, f_o));
    CycInt denom = ctx.ring().one();
    for (const auto& [pi, mult] : factor(F, tbl, f).factors) {
        if (mult % n == 0) continue; // pi does not divide f_o
        MulChar chim = char_pow(F, chi, -(int64_t)mult);
        denom = denom * ctx.tau(chim).pow((uint64_t)pi.deg());
    }
    CycInt tinv_f = ctx.tau(char_inv(F, chi)).pow((uint64_t)(f.deg() - 1));
    CycInt tinv_fo = ctx.tau(char_inv(F, chi)).pow((uint64_t)(f_o.deg() - 1));
    rep.rhs_deg_f = CycFrac(wd * sym_fp * tinv_f, denom);
    rep.rhs_deg_fo = CycFrac(wd * sym_fp * tinv_fo, denom);
    CycFrac lhs_frac(rep.lhs);
    rep.matches_deg_f = lhs_frac == rep.rhs_deg_f;
    rep.matches_deg_fo = lhs_frac == rep.rhs_deg_fo;

    // diagnosis: try to recognize lhs / rhs_deg_f as +-q^j tau(chi^t)^s with
    // small j, s in {0,1,2}
    rep.diagnosis = "unrecognized";
    if (rep.matches_deg_f && rep.matches_deg_fo) {
        rep.diagnosis = "both variants match";
    } else if (rep.matches_deg_f) {
        rep.diagnosis = "deg(f)-1 variant matches";
    } else if (rep.matches_deg_fo) {
        rep.diagnosis = "deg(f_o)-1 variant matches";
    } else if (!rep.rhs_deg_f.is_zero()) {
        CycFrac ratio = lhs_frac / rep.rhs_deg_f;
        const CycRing& R = ctx.ring();
        for (int sign = 0; sign < 2 && rep.diagnosis == "unrecognized"; ++sign) {
            for (int j = -2; j <= 2 && rep.diagnosis == "unrecognized"; ++j) {
                mpz_class qp = 1;
                for (int t = 0; t < std::abs(j); ++t) qp *= F.q();
                CycFrac base = j >= 0 ? CycFrac(R.from_int(qp)) : CycFrac(R.one(), R.from_int(qp));
                if (sign) base = -base;
                for (uint32_t t = 0; t < F.q() - 1 && rep.diagnosis == "unrecognized"; ++t) {
                    for (int s = 0; s <= 2; ++s) {
                        CycFrac cand = base * CycFrac(ctx.tau(MulChar{t}).pow((uint64_t)s));
                        if (ratio == cand) {
                            std::ostringstream os;
                            os << "lhs = rhs(deg f - 1) * (" << (sign ? "-" : "") << "q^" << j;
                            if (s) os << " * tau(chi_" << t << ")^" << s;
                            os << ")";
                            rep.diagnosis = os.str();
                            break;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace selberg
