#pragma once

#include "selberg/chars.hpp"
#include "selberg/cyclo.hpp"
#include "selberg/ff.hpp"
#include "selberg/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace selberg {

// Per-degree tables for the brute-force Selberg enumeration: Moebius value and
// dlog of the discriminant for every monic polynomial of that degree, indexed
// by unrank order.  dlog_disc = -1 marks D(c) = 0 (equivalently mu(c) = 0).
struct MuDiscTable {
    std::vector<int8_t> mu;
    std::vector<int32_t> dlog_disc;
};

// Shared context for everything above the field level: the cyclotomic ring
// Z[zeta_N] with N = p(q-1), the Gauss-sum cache, and lazily built polynomial
// tables.  Caches are mutex-guarded; all hot loops only read.
class GaussContext {
public:
    explicit GaussContext(FieldParams F);
    GaussContext(const GaussContext&) = delete;

    const FieldParams& field() const { return F_; }
    const CycRing& ring() const { return *ring_; }
    std::shared_ptr<const CycRing> ring_ptr() const { return ring_; }
    uint64_t N() const { return ring_->N(); }

    const CycInt& tau(MulChar chi) const;       // cached Gauss sum
    const IrredTable& irreducibles(int max_deg) const;
    const MuDiscTable& mu_disc(int deg) const;

private:
    FieldParams F_;
    std::shared_ptr<const CycRing> ring_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<CycInt>> tau_;
    // grow-only so references handed out earlier never dangle
    mutable std::vector<std::unique_ptr<IrredTable>> irred_;
    mutable std::map<int, std::unique_ptr<MuDiscTable>> mu_disc_;
};

// tau(chi) = sum_{a != 0} chi(a) e_o(a), by direct summation (served from the
// context cache after the first call).
const CycInt& gauss_sum(const GaussContext& ctx, MulChar chi);

// J(chi1, chi2) = sum_{a != 0, 1} chi1(a) chi2(1 - a), direct summation.
CycInt jacobi_sum(const GaussContext& ctx, MulChar chi1, MulChar chi2);

// g(r, chi, c) = sum over residues d mod c of chi(d/c) e(r d / c).
CycInt global_gauss(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c);

// Davenport-Hasse closed form mu(c) chi^{-1}(r/c) chi(c'/c) (-tau(chi))^deg c,
// for monic c coprime to r.
CycInt dh_evaluate(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c);

// Same value through chi(eta(deg c)) chi(D(c)) instead of chi(c'/c).
CycInt dh_evaluate_disc_form(const GaussContext& ctx, const Poly& r, MulChar chi, const Poly& c);

// Quadratic specialization g(1, omega, c) = mu(c)^2 omega(eta(deg c)) tau(omega)^deg c.
CycInt dh_quadratic(const GaussContext& ctx, const Poly& c);

// Empirical check of the Gauss-sum product identity against the brute-force
// coefficient sum: lhs = sum over monic g of degree deg(f_o) - 1 of chi(f/g),
// rhs = omega(D(f_o)) chi(f/f_o') tau(chi^{-1})^E / prod_{pi | f_o}
// tau(chi^{-ord_pi(f)})^{deg pi}, computed for both exponent readings
// E = deg(f) - 1 and E = deg(f_o) - 1.
struct AndersonReport {
    Poly f;
    MulChar chi;
    Poly f_o;
    CycInt lhs;
    CycFrac rhs_deg_f;
    CycFrac rhs_deg_fo;
    bool matches_deg_f = false;
    bool matches_deg_fo = false;
    std::string diagnosis; // recognized correction factor, if any
};
AndersonReport anderson_identity_check(const GaussContext& ctx, const Poly& f, MulChar chi);

} // namespace selberg
