#include "selberg/ff.hpp"

#include <algorithm>
#include <numeric>

namespace selberg {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p for bootstrap (modulus search).  Coefficients in
// [0, p), low degree first, trailing zeros stripped.
using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + (uint64_t)a[i] * b[j]) % p;
    // reduce mod the monic polynomial `mod`
    size_t m = mod.size() - 1;
    for (size_t d = acc.size(); d-- > m;) {
        uint64_t c = acc[d] % p;
        if (c == 0) continue;
        acc[d] = 0;
        for (size_t j = 0; j < m; ++j)
            acc[d - m + j] = (acc[d - m + j] + (uint64_t)(p - mod[j] % p) * c) % p;
    }
    FpPoly r(acc.begin(), acc.begin() + std::min(acc.size(), m));
    for (auto& c : r) c = (uint32_t)(c % p);
    fp_trim(r);
    return r;
}

// x^(p^k) mod c, by repeated p-th powering of x.
FpPoly fp_frobenius_of_x(const FpPoly& c, uint32_t p, uint32_t k) {
    FpPoly x = {0, 1};
    fp_trim(x);
    FpPoly cur = x;
    for (uint32_t step = 0; step < k; ++step) {
        // cur <- cur^p mod c by square-and-multiply on the exponent p
        FpPoly result = {1};
        FpPoly base = cur;
        uint32_t n = p;
        while (n) {
            if (n & 1) result = fp_mulmod(result, base, c, p);
            base = fp_mulmod(base, base, c, p);
            n >>= 1;
        }
        cur = result;
    }
    return cur;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t v) {
        // Fermat
        uint64_t r = 1, base = v % p;
        uint32_t n = p - 2;
        while (n) {
            if (n & 1) r = r * base % p;
            base = base * base % p;
            n >>= 1;
        }
        return (uint32_t)r;
    };
    while (!b.empty()) {
        // a mod b
        FpPoly r = a;
        uint32_t invlc = inv_mod_p(b.back());
        while (r.size() >= b.size() && !r.empty()) {
            uint64_t f = (uint64_t)r.back() * invlc % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                r[shift + j] = (uint32_t)((r[shift + j] + (uint64_t)(p - 1) * f % p * b[j]) % p);
            fp_trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for monic c of degree e over F_p.
bool fp_is_irreducible(const FpPoly& c, uint32_t p) {
    uint32_t e = (uint32_t)c.size() - 1;
    if (e == 0) return false;
    FpPoly x = {0, 1};
    for (uint32_t ell : prime_factors(e)) {
        FpPoly h = fp_frobenius_of_x(c, p, e / ell); // x^(p^(e/ell)) mod c
        // h - x
        FpPoly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(c, d, p);
        if (g.size() != 1) return false;
    }
    FpPoly top = fp_frobenius_of_x(c, p, e);
    FpPoly d = top;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    fp_trim(d);
    return d.empty();
}

} // namespace

FieldParams FieldParams::make(uint32_t p, uint32_t e, uint64_t q_bound) {
    if (p == 2 || !is_prime_u32(p)) throw std::invalid_argument("ff_make: p must be an odd prime");
    if (e < 1) throw std::invalid_argument("ff_make: e must be >= 1");
    uint64_t q = 1;
    for (uint32_t j = 0; j < e; ++j) {
        q *= p;
        if (q > q_bound) throw std::invalid_argument("ff_make: q exceeds configured bound");
    }

    FieldParams F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = (uint32_t)q;

    // First monic irreducible of degree e in lexicographic order of the
    // coefficient vector (c0,...,c_{e-1}), c0 most significant.
    if (e == 1) {
        F.modulus_ = {0, 1}; // identity placeholder x
    } else {
        uint64_t count = q; // p^e candidates
        bool found = false;
        for (uint64_t idx = 0; idx < count; ++idx) {
            FpPoly c(e + 1, 0);
            c[e] = 1;
            // (c0,...,c_{e-1}) with c0 as the most significant base-p digit of idx
            uint64_t t = idx;
            for (uint32_t j = e; j-- > 0;) {
                c[j] = (uint32_t)(t % p);
                t /= p;
            }
            if (fp_is_irreducible(c, p)) {
                F.modulus_ = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("ff_make: no irreducible found"); // unreachable
    }

    // Element order tables.
    F.lexidx_.resize(q);
    F.elem_.resize(q);
    {
        // lex index has a0 as the most significant base-p digit
        std::vector<uint32_t> pow_p(e);
        pow_p[0] = 1;
        for (uint32_t j = 1; j < e; ++j) pow_p[j] = pow_p[j - 1] * p;
        for (uint32_t code = 0; code < q; ++code) {
            uint32_t t = code, idx = 0;
            for (uint32_t j = 0; j < e; ++j) {
                uint32_t aj = t % p;
                t /= p;
                idx += aj * pow_p[e - 1 - j];
            }
            F.lexidx_[code] = idx;
            F.elem_[idx] = Fq{code};
        }
    }

    // Generator: first element of multiplicative order q-1 in lex order.
    auto raw_pow = [&F](Fq a, uint64_t n) {
        Fq r = F.one(), b = a;
        while (n) {
            if (n & 1) r = F.raw_mul(r, b);
            b = F.raw_mul(b, b);
            n >>= 1;
        }
        return r;
    };
    std::vector<uint32_t> qm1_primes = prime_factors(F.q_ - 1);
    bool gen_found = false;
    for (uint32_t idx = 0; idx < q && !gen_found; ++idx) {
        Fq cand = F.elem_[idx];
        if (cand.code == 0) continue;
        bool ok = raw_pow(cand, F.q_ - 1) == F.one();
        for (uint32_t ell : qm1_primes)
            if (ok && raw_pow(cand, (F.q_ - 1) / ell) == F.one()) ok = false;
        if (ok) {
            F.gen_ = cand;
            gen_found = true;
        }
    }
    if (!gen_found) throw std::logic_error("ff_make: no generator found"); // unreachable

    F.exp_.resize(F.q_ - 1);
    F.dlog_.assign(q, 0);
    Fq cur = F.one();
    for (uint32_t k = 0; k < F.q_ - 1; ++k) {
        F.exp_[k] = cur;
        F.dlog_[cur.code] = k;
        cur = F.raw_mul(cur, F.gen_);
    }
    return F;
}

Fq FieldParams::raw_mul(Fq a, Fq b) const {
    if (e_ == 1) return Fq{(uint32_t)((uint64_t)a.code * b.code % p_)};
    std::vector<uint32_t> da = rep(a), db = rep(b);
    std::vector<uint64_t> acc(2 * e_ - 1, 0);
    for (uint32_t i = 0; i < e_; ++i)
        for (uint32_t j = 0; j < e_; ++j)
            acc[i + j] = (acc[i + j] + (uint64_t)da[i] * db[j]) % p_;
    for (size_t d = acc.size(); d-- > e_;) {
        uint64_t c = acc[d];
        if (c == 0) continue;
        acc[d] = 0;
        for (uint32_t j = 0; j < e_; ++j)
            acc[d - e_ + j] = (acc[d - e_ + j] + (p_ - modulus_[j]) * c) % p_;
    }
    uint32_t code = 0;
    for (uint32_t j = e_; j-- > 0;) code = code * p_ + (uint32_t)(acc[j] % p_);
    return Fq{code};
}

Fq FieldParams::from_residue(int64_t a) const {
    int64_t r = a % (int64_t)p_;
    if (r < 0) r += p_;
    return Fq{(uint32_t)r};
}

std::vector<uint32_t> FieldParams::rep(Fq x) const {
    std::vector<uint32_t> d(e_);
    uint32_t t = x.code;
    for (uint32_t j = 0; j < e_; ++j) {
        d[j] = t % p_;
        t /= p_;
    }
    return d;
}

Fq FieldParams::elem_at(uint32_t lex_index) const {
    if (lex_index >= q_) throw std::out_of_range("elem_at: index out of range");
    return elem_[lex_index];
}

uint32_t FieldParams::lex_index(Fq x) const { return lexidx_[x.code]; }

Fq FieldParams::add(Fq a, Fq b) const {
    if (e_ == 1) {
        uint32_t s = a.code + b.code;
        if (s >= p_) s -= p_;
        return Fq{s};
    }
    uint32_t pw = 1, result = 0;
    uint32_t ta = a.code, tb = b.code;
    for (uint32_t j = 0; j < e_; ++j) {
        uint32_t s = ta % p_ + tb % p_;
        if (s >= p_) s -= p_;
        result += s * pw;
        pw *= p_;
        ta /= p_;
        tb /= p_;
    }
    return Fq{result};
}

Fq FieldParams::neg(Fq a) const {
    if (e_ == 1) return Fq{a.code == 0 ? 0u : p_ - a.code};
    uint32_t pw = 1, result = 0, ta = a.code;
    for (uint32_t j = 0; j < e_; ++j) {
        uint32_t d = ta % p_;
        result += (d == 0 ? 0 : p_ - d) * pw;
        pw *= p_;
        ta /= p_;
    }
    return Fq{result};
}

Fq FieldParams::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldParams::mul(Fq a, Fq b) const {
    if (a.code == 0 || b.code == 0) return Fq{0};
    uint64_t k = (uint64_t)dlog_[a.code] + dlog_[b.code];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

Fq FieldParams::inv(Fq a) const {
    if (a.code == 0) throw std::domain_error("inv: zero is not invertible");
    uint32_t k = dlog_[a.code];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
}

Fq FieldParams::pow(Fq a, int64_t n) const {
    if (a.code == 0) {
        if (n < 0) throw std::domain_error("pow: zero to negative power");
        return n == 0 ? one() : zero();
    }
    int64_t m = (q_ - 1);
    int64_t k = (int64_t)dlog_[a.code] % m * (n % m) % m;
    if (k < 0) k += m;
    return exp_[k];
}

uint32_t FieldParams::dlog(Fq x) const {
    if (x.code == 0) throw std::domain_error("dlog: zero has no discrete log");
    return dlog_[x.code];
}

Fq FieldParams::exp_g(uint64_t k) const { return exp_[k % (q_ - 1)]; }

uint32_t FieldParams::trace(Fq x) const {
    if (x.code == 0) return 0;
    uint64_t k = dlog_[x.code];
    Fq acc = zero();
    uint64_t pk = 1;
    for (uint32_t j = 0; j < e_; ++j) {
        acc = add(acc, exp_[k * pk % (q_ - 1)]);
        pk = pk * p_ % (q_ - 1);
    }
    // trace lies in the prime subfield, whose codes are 0..p-1
    return acc.code;
}

} // namespace selberg
