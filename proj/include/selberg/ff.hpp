#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace selberg {

// Element of F_q, q = p^e.  code = sum a_j p^j where a_j are the coefficients
// of the representative polynomial modulo the field modulus (low degree first).
// Canonically reduced, so equality is plain integer equality.
struct Fq {
    uint32_t code = 0;
    bool operator==(const Fq&) const = default;
};

// Arithmetic context for F_q with q = p^e, p an odd prime.  The modulus and
// the multiplicative generator are chosen by deterministic lexicographic
// search, so two contexts built from the same (p, e) agree element-for-element.
// Immutable after construction; safe to share across threads.
class FieldParams {
public:
    static FieldParams make(uint32_t p, uint32_t e, uint64_t q_bound = (1u << 20));

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq gen() const { return gen_; }
    bool is_zero(Fq x) const { return x.code == 0; }

    // Modulus as coefficients mod p, low degree first, length e+1, monic.
    // For e = 1 this is the identity placeholder x.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // Embedding of Z into the prime subfield.
    Fq from_residue(int64_t a) const;

    // Coefficients of the representative polynomial, length e, low degree first.
    std::vector<uint32_t> rep(Fq x) const;

    // Fixed total order on elements: lexicographic on rep vectors (a0,...,a_{e-1})
    // with a0 most significant.  elem_at is the inverse of lex_index.
    Fq elem_at(uint32_t lex_index) const;
    uint32_t lex_index(Fq x) const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;           // throws std::domain_error on zero
    Fq pow(Fq a, int64_t n) const; // 0^0 = 1; negative n inverts first

    // Discrete log with respect to gen(); throws std::domain_error on zero.
    uint32_t dlog(Fq x) const;
    Fq exp_g(uint64_t k) const;   // gen()^k

    // Tr(x) = x + x^p + ... + x^(p^(e-1)), returned as a residue in [0, p).
    uint32_t trace(Fq x) const;

private:
    FieldParams() = default;

    uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;
    Fq gen_;
    std::vector<Fq> exp_;          // exp_[k] = gen^k, k in [0, q-1)
    std::vector<uint32_t> dlog_;   // dlog_[code], undefined slot for 0
    std::vector<uint32_t> lexidx_; // code -> lex index
    std::vector<Fq> elem_;         // lex index -> element

    Fq raw_mul(Fq a, Fq b) const;  // polynomial multiplication mod modulus
};

} // namespace selberg
