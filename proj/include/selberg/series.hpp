#pragma once

#include "selberg/aevw.hpp"
#include "selberg/selberg_sum.hpp"

#include <complex>
#include <optional>

namespace selberg {

// Se values along the progression i = i0 + l n, l = 0..count-1.
struct PowerSeriesWindow {
    int i0 = 0;
    uint32_t n = 1;
    std::vector<CycInt> coeffs;
};

PowerSeriesWindow series_coeffs(const GaussContext& ctx, const Poly& r, MulChar chi1, MulChar chi2, int i0,
                                int count, const SelbergOptions& opt = {});

// Exact Pade-style fit: num/den with deg num <= dmax_num, deg den <= dmax_den,
// den(0) = 1, reproducing every window coefficient.  Requires at least
// dmax_num + dmax_den + 2 coefficients (one spare for validation); returns
// nullopt when no consistent fit exists at these degrees.
std::optional<RationalFn> rational_reconstruct(const std::vector<CycFrac>& window, int dmax_num, int dmax_den);

// Taylor coefficients of a rational function, den[0] invertible.
std::vector<CycFrac> taylor(const RationalFn& fn, int count);

struct Singularity {
    std::complex<double> root;
    double magnitude = 0;
    int multiplicity = 1;
};

// Complex roots of the denominator in a chosen embedding, clustered into
// multiplicities; numerical (Durand-Kerner), used for locating and measuring
// singularities only, never for equality decisions.
std::vector<Singularity> singularity_report(const RationalFn& fn, uint64_t sigma = 1);

// chi2 = 1 branch: both coefficient sequences of L(s, chi1(r/.)) territory.
//   a_i = sum_{deg c = i} chi1(r/c)            (L-polynomial coefficients)
//   b_i = sum_{deg c = i} mu(c) chi1(r/c)      (the Selberg sequence)
struct LseriesReport {
    Poly r;
    MulChar chi1;
    uint32_t n_prime = 0;
    Poly conductor;      // product of pi | r with ord(chi1) nmid ord_pi(r)
    Poly modulus_rad;    // radical of r
    bool principal = false;
    std::vector<CycInt> a_coeffs;
    std::vector<CycInt> b_coeffs;
    int observed_a_vanish_from = -1; // first index with a_i = 0 onward, -1 if none
    bool product_is_one = false;     // sum a * sum b == 1 to the computed order
    // non-principal: inverse roots of sum a_i T^i and their magnitudes
    std::vector<std::complex<double>> inverse_roots;
    bool weil_all_sqrt_q = false;
    bool has_trivial_zero = false; // ord(chi1) | deg r: one inverse root of modulus 1
    // principal: which displayed closed form matches the b-sequence
    std::string principal_b_match; // "product", "quotient", "both", "neither"
};

LseriesReport lseries_analyze(const GaussContext& ctx, const Poly& r, MulChar chi1, int extra_terms = 2,
                              const SelbergOptions& opt = {});

// Roots of a complex polynomial (low degree first), Durand-Kerner iteration.
std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs);

} // namespace selberg
