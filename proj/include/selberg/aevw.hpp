#pragma once

#include "selberg/sums.hpp"

#include <optional>

namespace selberg {

// Case data for the two-rational-zero family r = x^{e0}(x-1)^{e1}.
// f0, f1 are the least nonnegative subgroup logs with chi1^{e_j} chi2^{f_j} = 1;
// they exist exactly in the metaplectic case.
struct AevwParams {
    uint32_t e0 = 1, e1 = 1;
    MulChar chi1, chi2;
    uint32_t n = 0; // ord(chi2)
    bool metaplectic = false;
    std::optional<uint32_t> f0, f1;
};

AevwParams classify(const FieldParams& F, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2);

// P_i(e0,e1,chi1,chi2) = prod_{0<=j<i} tau(chi1^{e0} chi2^j) tau(chi1^{e1} chi2^j)
//                        tau(chi2^{j+1}) conj(tau(chi1^{e0+e1} chi2^{i-1+j})) / (q tau(chi2)).
CycFrac p_product(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2, uint32_t i);

// Period constant with P_{i+ln} = A^l P_i:
//   metaplectic:     q^{n-2} chi2(eta(n)) / tau(chi2)^n
//   non-metaplectic: -J(chi1^{e0 n}, chi1^{e1 n}) q^{n-1} chi2(eta(n)) / tau(chi2)^n
CycFrac a_factor(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2);

// T(y,q) = -y + sum_{k=0}^{y} (2k+1)(-q)^{y-k};  S(y,q) = 1 - (1-q) y.
mpz_class t_factor(int64_t y, const mpz_class& q);
mpz_class s_factor(int64_t y, const mpz_class& q);

// U_e(q,X) = 2X^2q^2 - qX^2 - 3qX + X + 1;  U_o(q,X) = X^2q^2 + q^2X - 3qX - q + 2.
CycFrac u_e_eval(const mpz_class& q, const CycFrac& X);
CycFrac u_o_eval(const mpz_class& q, const CycFrac& X);

// Branch of the metaplectic evaluation.  The selection compares (i)_n and
// (f0+f1-i+1)_n against the subgroup logs taken on the chi2^f = chi1^{e_j}
// side (the least nonnegative f with chi2^f = chi1^{e_j}); verified against
// brute force across the acceptance grid.
enum class MetBranch { TEven, TOdd, S };
MetBranch branch_select(uint32_t i, uint32_t n, uint32_t f0_dir, uint32_t f1_dir);

// Closed-form value of Se(x^{e0}(x-1)^{e1}, chi1, chi2, i) for n = ord(chi2) > 1:
//   chi1(-1)^{e1 i} (-1)^i P_i                         (non-metaplectic)
//   chi1(-1)^{e1 i} (-1)^i q^{floor(i/n)} P_i V        (metaplectic)
// with V = T(2 floor(i/n)) / q T(2 floor(i/n) + 1) / 1 - (q-1) floor(i/n)
// according to the branch.  Throws std::domain_error for n = 1.
CycFrac closed_form(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2, uint32_t i);

// Rational function over CycFrac: coefficient lists, den[0] != 0.
struct RationalFn {
    std::vector<CycFrac> num, den;
};

// Predicted generating function of sum_l Se(i0 + l n) X^l for 0 <= i0 < n.
RationalFn predicted_series(const GaussContext& ctx, uint32_t e0, uint32_t e1, MulChar chi1, MulChar chi2,
                            uint32_t i0);

// van Wamelen's extra evaluation of P at index f0 + f1 + 1 (metaplectic case);
// exposes the closed form so tests can compare it with p_product directly.
CycFrac vw_lemma2_value(const GaussContext& ctx, const AevwParams& par);

} // namespace selberg
