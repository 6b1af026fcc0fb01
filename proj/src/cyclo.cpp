#include "selberg/cyclo.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace selberg {

uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, both low-degree-first; divisor monic.
std::vector<mpz_class> exact_div(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r = a;
    std::vector<mpz_class> qout(a.size() - b.size() + 1);
    for (size_t qi = qout.size(); qi-- > 0;) {
        mpz_class c = r[qi + b.size() - 1];
        qout[qi] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) r[qi + j] -= c * b[j];
    }
    for (const auto& rem : r)
        if (rem != 0) throw std::logic_error("exact_div: nonzero remainder");
    return qout;
}

} // namespace

std::vector<mpz_class> cyclotomic_poly(uint64_t N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: N >= 1 required");
    static std::map<uint64_t, std::vector<mpz_class>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    std::function<std::vector<mpz_class>(uint64_t)> phi = [&](uint64_t n) -> std::vector<mpz_class> {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> result;
        if (n == 1) {
            result = {-1, 1};
        } else {
            std::vector<mpz_class> num(n + 1);
            num[0] = -1;
            num[n] = 1;
            for (uint64_t d = 1; d < n; ++d)
                if (n % d == 0) num = exact_div(num, phi(d));
            result = std::move(num);
        }
        cache[n] = result;
        return result;
    };
    return phi(N);
}

// ---------------------------------------------------------------------------
// CycRing

std::shared_ptr<const CycRing> CycRing::make(uint64_t N) {
    auto ring = std::shared_ptr<CycRing>(new CycRing());
    ring->N_ = N;
    ring->phi_poly_ = cyclotomic_poly(N);
    ring->phi_ = ring->phi_poly_.size() - 1;

    // product over divisors check: prod_{d|N} Phi_d = x^N - 1
    {
        std::vector<mpz_class> prod = {1};
        for (uint64_t d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            auto f = cyclotomic_poly(d);
            std::vector<mpz_class> next(prod.size() + f.size() - 1);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
            prod = std::move(next);
        }
        bool ok = prod.size() == N + 1 && prod[0] == -1 && prod[N] == 1;
        for (uint64_t k = 1; ok && k < N; ++k) ok = prod[k] == 0;
        if (!ok) throw std::logic_error("CycRing: cyclotomic factorization check failed");
    }

    // canonical powers of zeta: multiply by x and reduce
    ring->zeta_pow_.reserve(N);
    std::vector<mpz_class> cur(ring->phi_, 0);
    if (ring->phi_ == 0) throw std::logic_error("CycRing: phi == 0");
    cur[0] = 1;
    for (uint64_t k = 0; k < N; ++k) {
        ring->zeta_pow_.push_back(CycInt(ring.get(), cur));
        // cur <- cur * x mod Phi_N
        mpz_class top = cur.back();
        for (size_t j = cur.size(); j-- > 1;) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t j = 0; j < ring->phi_; ++j) cur[j] -= top * ring->phi_poly_[j];
    }
    return ring;
}

CycInt CycRing::zero() const { return CycInt(this, std::vector<mpz_class>(phi_, 0)); }

CycInt CycRing::one() const { return from_int(1); }

CycInt CycRing::from_int(const mpz_class& k) const {
    std::vector<mpz_class> c(phi_, 0);
    c[0] = k;
    return CycInt(this, std::move(c));
}

CycInt CycRing::zeta(int64_t k) const {
    int64_t r = k % (int64_t)N_;
    if (r < 0) r += (int64_t)N_;
    return zeta_pow_[(size_t)r];
}

CycInt CycRing::from_counts(const std::vector<int64_t>& counts) const {
    std::vector<mpz_class> big(counts.size());
    for (size_t k = 0; k < counts.size(); ++k) big[k] = counts[k];
    return from_counts(big);
}

CycInt CycRing::from_counts(const std::vector<mpz_class>& counts) const {
    if (counts.size() != N_) throw std::invalid_argument("from_counts: need N entries");
    std::vector<mpz_class> acc(phi_, 0);
    for (size_t k = 0; k < N_; ++k) {
        if (counts[k] == 0) continue;
        const auto& zk = zeta_pow_[k].coeffs();
        for (size_t j = 0; j < phi_; ++j)
            if (zk[j] != 0) acc[j] += counts[k] * zk[j];
    }
    return CycInt(this, std::move(acc));
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(const CycRing* ring, std::vector<mpz_class> coeffs) : ring_(ring), c_(std::move(coeffs)) {
    if (c_.size() != ring_->phi()) throw std::invalid_argument("CycInt: wrong coefficient count");
}

static void require_same(const CycInt& a, const CycInt& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
        throw std::invalid_argument("CycInt: ring mismatch");
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::operator==(const CycInt& o) const {
    require_same(*this, o);
    return c_ == o.c_;
}

CycInt CycInt::operator+(const CycInt& o) const {
    require_same(*this, o);
    std::vector<mpz_class> r(c_);
    for (size_t j = 0; j < r.size(); ++j) r[j] += o.c_[j];
    return CycInt(ring_, std::move(r));
}

CycInt CycInt::operator-(const CycInt& o) const {
    require_same(*this, o);
    std::vector<mpz_class> r(c_);
    for (size_t j = 0; j < r.size(); ++j) r[j] -= o.c_[j];
    return CycInt(ring_, std::move(r));
}

CycInt CycInt::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& x : r) x = -x;
    return CycInt(ring_, std::move(r));
}

CycInt CycInt::operator*(const CycInt& o) const {
    require_same(*this, o);
    size_t phi = c_.size();
    std::vector<mpz_class> acc(2 * phi - 1, 0);
    for (size_t i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < phi; ++j)
            if (o.c_[j] != 0) acc[i + j] += c_[i] * o.c_[j];
    }
    // reduce modulo the monic cyclotomic polynomial
    const auto& m = ring_->phi_poly_;
    for (size_t d = acc.size(); d-- > phi;) {
        mpz_class top = acc[d];
        if (top == 0) continue;
        acc[d] = 0;
        for (size_t j = 0; j < phi; ++j) acc[d - phi + j] -= top * m[j];
    }
    acc.resize(phi);
    return CycInt(ring_, std::move(acc));
}

CycInt CycInt::operator*(const mpz_class& k) const {
    std::vector<mpz_class> r(c_);
    for (auto& x : r) x *= k;
    return CycInt(ring_, std::move(r));
}

CycInt CycInt::conj() const {
    uint64_t N = ring_->N();
    std::vector<mpz_class> counts(N, 0);
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) counts[(N - j) % N] += c_[j];
    return ring_->from_counts(counts);
}

CycInt CycInt::pow(uint64_t n) const {
    CycInt r = ring_->one(), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::complex<double> CycInt::embed(uint64_t sigma) const {
    const double two_pi = 6.283185307179586476925286766559;
    uint64_t N = ring_->N();
    std::complex<long double> acc = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        long double angle = (long double)two_pi * (long double)((sigma * j) % N) / (long double)N;
        acc += (long double)c_[j].get_d() * std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return {(double)acc.real(), (double)acc.imag()};
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t j = 0; j < c_.size(); ++j) {
        if (j) os << ",";
        os << c_[j].get_str();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// CycFrac

CycFrac::CycFrac(CycInt num, CycInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("CycFrac: zero denominator");
}

CycFrac::CycFrac(CycInt num) : num_(std::move(num)), den_(num_.ring()->one()) {}

CycFrac CycFrac::operator+(const CycFrac& o) const {
    return CycFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CycFrac CycFrac::operator-(const CycFrac& o) const {
    return CycFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

CycFrac CycFrac::operator-() const { return CycFrac(-num_, den_); }

CycFrac CycFrac::operator*(const CycFrac& o) const { return CycFrac(num_ * o.num_, den_ * o.den_); }

CycFrac CycFrac::operator/(const CycFrac& o) const {
    if (o.num_.is_zero()) throw std::domain_error("CycFrac: division by zero");
    return CycFrac(num_ * o.den_, den_ * o.num_);
}

CycFrac CycFrac::inv() const {
    if (num_.is_zero()) throw std::domain_error("CycFrac: inverse of zero");
    return CycFrac(den_, num_);
}

bool CycFrac::operator==(const CycFrac& o) const { return num_ * o.den_ == o.num_ * den_; }

std::complex<double> CycFrac::embed(uint64_t sigma) const { return num_.embed(sigma) / den_.embed(sigma); }

} // namespace selberg
