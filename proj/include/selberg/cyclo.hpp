#pragma once

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace selberg {

class CycRing;

// Exact element of Z[zeta_N], stored as the canonical remainder modulo the
// N-th cyclotomic polynomial: an integer vector of length phi(N).  Values are
// immutable in spirit; all operations return fresh objects.
class CycInt {
public:
    CycInt() = default;
    CycInt(const CycRing* ring, std::vector<mpz_class> coeffs);

    const CycRing* ring() const { return ring_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const mpz_class& k) const;
    CycInt conj() const; // restriction of complex conjugation, zeta -> zeta^(N-1)
    CycInt pow(uint64_t n) const;

    std::complex<double> embed(uint64_t sigma = 1) const;
    std::string to_string() const;

private:
    const CycRing* ring_ = nullptr;
    std::vector<mpz_class> c_;
    friend class CycRing;
};

// Formal quotient in the fraction field of Z[zeta_N].  Never auto-reduced;
// equality is cross-multiplication, which is exact since Phi_N is irreducible.
class CycFrac {
public:
    CycFrac() = default;
    CycFrac(CycInt num, CycInt den);
    explicit CycFrac(CycInt num);

    const CycInt& num() const { return num_; }
    const CycInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    CycFrac operator+(const CycFrac& o) const;
    CycFrac operator-(const CycFrac& o) const;
    CycFrac operator-() const;
    CycFrac operator*(const CycFrac& o) const;
    CycFrac operator/(const CycFrac& o) const; // throws on zero divisor
    CycFrac inv() const;                       // throws on zero
    bool operator==(const CycFrac& o) const;   // ad == cb
    bool operator!=(const CycFrac& o) const { return !(*this == o); }

    std::complex<double> embed(uint64_t sigma = 1) const;

private:
    CycInt num_, den_;
};

// Z[zeta_N] context: cyclotomic polynomial, canonical powers of zeta, helpers.
// Construct once (make), share by pointer; immutable afterwards.
class CycRing {
public:
    static std::shared_ptr<const CycRing> make(uint64_t N);

    uint64_t N() const { return N_; }
    size_t phi() const { return phi_; }
    const std::vector<mpz_class>& cyclotomic() const { return phi_poly_; }

    CycInt zero() const;
    CycInt one() const;
    CycInt from_int(const mpz_class& k) const;
    CycInt zeta(int64_t k) const; // canonical form of zeta^k, k taken mod N

    // Sum of counts[k] * zeta^k; the workhorse for character-sum accumulators.
    CycInt from_counts(const std::vector<int64_t>& counts) const;
    CycInt from_counts(const std::vector<mpz_class>& counts) const;

    bool same(const CycRing& o) const { return this == &o || N_ == o.N_; }

private:
    CycRing() = default;

    uint64_t N_ = 0;
    size_t phi_ = 0;
    std::vector<mpz_class> phi_poly_; // monic, length phi_+1
    std::vector<CycInt> zeta_pow_;    // N_ canonical powers

    friend class CycInt;
};

// Coefficients of the N-th cyclotomic polynomial, low degree first, by
// recursive exact division of x^N - 1 by the proper-divisor factors.
std::vector<mpz_class> cyclotomic_poly(uint64_t N);

uint64_t euler_phi(uint64_t n);

} // namespace selberg
