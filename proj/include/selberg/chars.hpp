#pragma once

#include "selberg/cyclo.hpp"
#include "selberg/ff.hpp"
#include "selberg/poly.hpp"

#include <optional>

namespace selberg {

// Multiplicative character of F_q^x, indexed by its exponent m relative to
// the fixed generator: chi_m(g^k) = zeta_{q-1}^{mk}.  chi_0 is trivial and
// omega = chi_{(q-1)/2} is the quadratic character.
struct MulChar {
    uint32_t m = 0;
    bool operator==(const MulChar&) const = default;
};

inline MulChar trivial_char() { return MulChar{0}; }
MulChar omega_char(const FieldParams& F);
uint32_t char_order(const FieldParams& F, MulChar chi);
bool is_trivial(MulChar chi);
MulChar char_mul(const FieldParams& F, MulChar a, MulChar b);
MulChar char_pow(const FieldParams& F, MulChar chi, int64_t n);
MulChar char_inv(const FieldParams& F, MulChar chi);

// chi(-1) as an integer sign: (-1)^m.
int char_at_minus_one(MulChar chi);

// Value of chi at x as an exponent of zeta_N, N = p(q-1); nullopt encodes the
// value 0 at x = 0 (the convention used throughout the sums).
std::optional<uint64_t> char_zexp(const FieldParams& F, uint64_t N, MulChar chi, Fq x);
CycInt char_value(const FieldParams& F, const CycRing& ring, MulChar chi, Fq x);

// e_o(t) = zeta_p^Tr(t) lifted into Z[zeta_N]; exponent of zeta_N.
uint64_t additive_zexp(const FieldParams& F, uint64_t N, Fq t);

// e(f) = e_o of the coefficient of x^{-1} in the expansion of f at infinity.
CycInt additive_e(const FieldParams& F, const CycRing& ring, const RationalFunc& f);

// Dirichlet symbol chi(f/g) = chi(R(g, f)); zero when gcd(f, g) is nonconstant.
CycInt dirichlet_symbol(const FieldParams& F, const CycRing& ring, MulChar chi, const Poly& f, const Poly& g);

// Rational extension: chi(u/g) chi^{-1}(v/g) for f = u/v; zero if gcd(u,g) is
// nonconstant, error if a pole of f shares a factor with g.
CycInt dirichlet_symbol(const FieldParams& F, const CycRing& ring, MulChar chi, const RationalFunc& f,
                        const Poly& g);

// chi0 generating the cyclic group <chi1, chi2^2>, with the minimal a, b >= 0
// such that chi1 = chi0^a and chi2^2 = chi0^b.
struct CharTriple {
    MulChar chi0, chi1, chi2;
    uint32_t a = 0, b = 0;
    uint32_t n = 0;       // ord(chi2)
    uint32_t n_prime = 0; // ord(chi1)
};
CharTriple char_decompose(const FieldParams& F, MulChar chi1, MulChar chi2);

// Least f in [0, ord(psi)) with chi * psi^f = 1, if chi lies in <psi>.
std::optional<uint32_t> char_subgroup_log(const FieldParams& F, MulChar chi, MulChar psi);

} // namespace selberg
