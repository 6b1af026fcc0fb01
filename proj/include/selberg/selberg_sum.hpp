#pragma once

#include "selberg/sums.hpp"

#include <optional>

namespace selberg {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SeCase { Metaplectic, NonMetaplectic, OrderOne };

// Behaviour when an enumerated c shares a factor with the denominator of a
// rational twist: Error is the module default; ZeroTerm treats the term as 0,
// which is what the Moebius-transformation identity requires for the factors
// its own right-hand side kills.
enum class PolePolicy { Error, ZeroTerm };

struct SelbergOptions {
    int threads = 1;
    uint64_t budget = 1ull << 24;
    PolePolicy pole_policy = PolePolicy::Error;
};

struct SelbergResult {
    CycInt value;
    uint32_t n = 0;       // ord(chi2)
    uint32_t n_prime = 0; // ord(chi1)
    SeCase kase = SeCase::NonMetaplectic;
    std::optional<uint32_t> f0, f1; // subgroup logs, AEvW family only
    uint64_t count_enumerated = 0;
};

// Se(r, chi1, chi2, i) = sum over monic degree-i c of mu(c) chi1(r/c) chi2(D(c)),
// by enumeration; i < 0 gives 0, i = 0 gives 1.  The sum is partitioned into
// contiguous unrank ranges per worker and merged exactly, so the result is
// bit-identical for any worker count.
SelbergResult selberg_bruteforce(const GaussContext& ctx, const Poly& r, MulChar chi1, MulChar chi2, int i,
                                 const SelbergOptions& opt = {});

// Rational twist variant (Moebius-transformed arguments).
SelbergResult selberg_bruteforce(const GaussContext& ctx, const RationalFunc& r, MulChar chi1, MulChar chi2,
                                 int i, const SelbergOptions& opt = {});

// Stability of Se under r -> pi^{n'} r for monic irreducible pi.
// If pi | r the two sums agree; otherwise their difference is compared with
// -chi1(r/pi) chi2(D(pi)) Se(r^a pi^b, chi0, chi2, i - deg pi), both with the
// literal (a, b) exponents from char_decompose and with the support-corrected
// ones (zero exponents bumped to ord(chi0)).
struct StabilityReport {
    bool divides = false;
    CycInt lhs;           // Se(r,...) or the difference of the two sums
    CycInt rhs;           // Se(pi^{n'} r, ...) or the literal right-hand side
    CycInt rhs_corrected; // support-corrected variant (pi nmid r case only)
    bool equal_literal = false;
    bool equal_corrected = false;
    CycInt residual; // lhs - rhs (literal)
};
StabilityReport stability_check(const GaussContext& ctx, const Poly& pi, const Poly& r, MulChar chi1,
                                MulChar chi2, int i, const SelbergOptions& opt = {});

// Moebius-transformation formula for the matrix (alpha beta; gamma delta).
// Both sides are computed by brute force; the report records the literal
// transcription (denominator power 2(b(i-1)+M), prefactor chi2(Delta)^{1-i})
// and the derived reading (denominator power b(i-1)+M, prefactor
// chi2(Delta)^{i(i-1)}), plus every prefactor exponent that balances each side.
struct Theorem1Report {
    Fq alpha, beta, gamma, delta, Delta;
    uint32_t M = 0, M_prime = 0;
    CycInt se_left_literal;   // Se with the doubled denominator power
    CycInt se_left_single;    // Se with the single denominator power
    CycInt se_right;
    bool equal_literal = false;
    bool equal_derived = false;
    std::vector<uint32_t> balancing_exponents_literal; // t with chi2(Delta)^t * left == right
    std::vector<uint32_t> balancing_exponents_single;
};
Theorem1Report theorem1_check(const GaussContext& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta, const Poly& r,
                              MulChar chi1, MulChar chi2, int i, const SelbergOptions& opt = {});

} // namespace selberg
