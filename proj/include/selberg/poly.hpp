#pragma once

#include "selberg/ff.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace selberg {

// Polynomial over F_q, coefficients low degree first, trailing zeros stripped.
// The zero polynomial is the empty vector; deg() reports -1 for it.
struct Poly {
    std::vector<Fq> c;
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Fq lc() const { return c.back(); } // caller ensures nonzero poly
    Fq coeff(size_t j) const { return j < c.size() ? c[j] : Fq{0}; }
    bool operator==(const Poly&) const = default;
};

struct RationalFunc {
    Poly num, den; // den != 0
};

struct FactoredPoly {
    Fq unit;                                      // leading coefficient
    std::vector<std::pair<Poly, uint32_t>> factors; // monic irreducible bases, distinct
};

Poly poly_zero();
Poly poly_one(const FieldParams& F);
Poly poly_const(const FieldParams& F, Fq a);
Poly poly_x(const FieldParams& F);
// x + a (monic linear with root -a)
Poly poly_linear(const FieldParams& F, Fq a);
void poly_trim(Poly& f);

Poly poly_add(const FieldParams& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldParams& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldParams& F, const Poly& a);
Poly poly_mul(const FieldParams& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldParams& F, Fq k, const Poly& a);
std::pair<Poly, Poly> poly_divrem(const FieldParams& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldParams& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldParams& F, Poly a, Poly b); // monic (or zero)
Fq poly_eval(const FieldParams& F, const Poly& f, Fq x);
Poly poly_derivative(const FieldParams& F, const Poly& f);
Poly poly_compose(const FieldParams& F, const Poly& f, const Poly& g); // f(g(x))
Poly poly_pow(const FieldParams& F, const Poly& f, uint32_t n);
Poly make_monic(const FieldParams& F, const Poly& f);
bool is_monic(const Poly& f);

// Euclidean-recursion resultant with R(x-a, f) = f(a), R(f, b) = b^deg f for
// constant b, bimultiplicativity and the reciprocity law.
Fq resultant(const FieldParams& F, const Poly& f, const Poly& g);

// Sign eta(n): +1 for n = 0,1 (mod 4), -1 for n = 2,3 (mod 4).
int eta_sign(int n);

// D(f) = eta(deg f) R(f, f') for monic f; deg f <= 1 gives 1.
Fq discriminant(const FieldParams& F, const Poly& f);

// Rankable enumeration of monic degree-i polynomials: the base-q digits of k,
// via the fixed element order of FieldParams, are the coefficients c0..c_{i-1}.
uint64_t monic_count(const FieldParams& F, int i); // q^i
Poly monic_unrank(const FieldParams& F, int i, uint64_t k);
void monic_unrank_into(const FieldParams& F, int i, uint64_t k, Poly& out);
uint64_t monic_rank(const FieldParams& F, const Poly& f);

// All q^len polynomials of degree < len (residues mod a degree-len modulus).
Poly residue_unrank(const FieldParams& F, int len, uint64_t k);

// Table of all monic irreducibles up to a degree bound, in unrank order,
// built once by sieve and then read-only.
class IrredTable {
public:
    IrredTable(const FieldParams& F, int max_deg);
    const std::vector<Poly>& of_degree(int d) const;
    int max_deg() const { return (int)by_deg_.size() - 1; }
    bool is_irreducible(const FieldParams& F, const Poly& f) const;

private:
    std::vector<std::vector<Poly>> by_deg_;
};

// Trial division against irreducibles of degree <= ceil(deg f / 2); the
// remaining cofactor is irreducible.  Factors sorted by (degree, rank).
FactoredPoly factor(const FieldParams& F, const IrredTable& tbl, const Poly& f);

// 0 if not squarefree, else (-1)^(number of irreducible factors); units give 1.
int mobius(const FieldParams& F, const IrredTable& tbl, const Poly& f);

// Product of the monic prime divisors pi of r whose multiplicity in r is not
// divisible by n; 1 when there are none.
Poly conductor_support(const FieldParams& F, const IrredTable& tbl, const Poly& r, uint32_t n);

// CLI text syntax: comma-separated coefficients low to high; field elements
// are plain integers for e = 1 or bracketed digit vectors "[a0 a1 ...]" for e > 1.
Poly parse_poly(const FieldParams& F, const std::string& text);
std::string format_poly(const FieldParams& F, const Poly& f);

} // namespace selberg
