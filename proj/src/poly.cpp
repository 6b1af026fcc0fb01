#include "selberg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace selberg {

Poly poly_zero() { return Poly{}; }

Poly poly_one(const FieldParams& F) { return Poly{{F.one()}}; }

Poly poly_const(const FieldParams& F, Fq a) {
    if (F.is_zero(a)) return Poly{};
    return Poly{{a}};
}

Poly poly_x(const FieldParams& F) { return Poly{{F.zero(), F.one()}}; }

Poly poly_linear(const FieldParams& F, Fq a) { return Poly{{a, F.one()}}; }

void poly_trim(Poly& f) {
    while (!f.c.empty() && f.c.back().code == 0) f.c.pop_back();
}

Poly poly_add(const FieldParams& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = F.add(a.coeff(j), b.coeff(j));
    poly_trim(r);
    return r;
}

Poly poly_neg(const FieldParams& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_sub(const FieldParams& F, const Poly& a, const Poly& b) { return poly_add(F, a, poly_neg(F, b)); }

Poly poly_mul(const FieldParams& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].code == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const FieldParams& F, Fq k, const Poly& a) {
    if (F.is_zero(k)) return Poly{};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(k, x);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const FieldParams& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.deg() < b.deg()) return {Poly{}, a};
    Poly r = a;
    Poly q;
    q.c.assign(a.deg() - b.deg() + 1, F.zero());
    Fq invlc = F.inv(b.lc());
    for (int d = a.deg(); d >= b.deg(); --d) {
        if ((int)r.c.size() <= d || r.c[d].code == 0) continue;
        Fq f = F.mul(r.c[d], invlc);
        q.c[d - b.deg()] = f;
        for (int j = 0; j <= b.deg(); ++j)
            r.c[d - b.deg() + j] = F.sub(r.c[d - b.deg() + j], F.mul(f, b.c[j]));
    }
    poly_trim(q);
    poly_trim(r);
    return {q, r};
}

Poly poly_mod(const FieldParams& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }

Poly poly_gcd(const FieldParams& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

Fq poly_eval(const FieldParams& F, const Poly& f, Fq x) {
    Fq acc = F.zero();
    for (size_t j = f.c.size(); j-- > 0;) acc = F.add(F.mul(acc, x), f.c[j]);
    return acc;
}

Poly poly_derivative(const FieldParams& F, const Poly& f) {
    Poly r;
    if (f.deg() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t j = 1; j < f.c.size(); ++j) r.c[j - 1] = F.mul(F.from_residue((int64_t)j), f.c[j]);
    poly_trim(r);
    return r;
}

Poly poly_compose(const FieldParams& F, const Poly& f, const Poly& g) {
    Poly acc;
    for (size_t j = f.c.size(); j-- > 0;) {
        acc = poly_mul(F, acc, g);
        acc = poly_add(F, acc, poly_const(F, f.c[j]));
    }
    return acc;
}

Poly poly_pow(const FieldParams& F, const Poly& f, uint32_t n) {
    Poly r = poly_one(F), b = f;
    while (n) {
        if (n & 1) r = poly_mul(F, r, b);
        b = poly_mul(F, b, b);
        n >>= 1;
    }
    return r;
}

Poly make_monic(const FieldParams& F, const Poly& f) {
    if (f.is_zero()) return f;
    return poly_scale(F, F.inv(f.lc()), f);
}

bool is_monic(const Poly& f) { return !f.is_zero() && f.lc().code == 1; }

Fq resultant(const FieldParams& F, const Poly& f_in, const Poly& g_in) {
    Poly f = f_in, g = g_in;
    // constant cases, with 0^0 = 1 so that R of two constants is 1
    if (f.deg() <= 0 && g.deg() <= 0) return F.one();
    if (f.deg() <= 0) return F.pow(f.is_zero() ? F.zero() : f.c[0], g.deg());
    if (g.deg() <= 0) return F.pow(g.is_zero() ? F.zero() : g.c[0], f.deg());

    Fq acc = F.one();
    bool negate = false;
    for (;;) {
        if (g.deg() < f.deg()) {
            // reciprocity: R(f,g) = (-1)^(deg f deg g) R(g,f)
            if ((f.deg() & 1) && (g.deg() & 1)) negate = !negate;
            std::swap(f, g);
        }
        // now deg g >= deg f >= 1
        Poly s = poly_mod(F, g, f);
        if (s.is_zero()) return F.zero();
        acc = F.mul(acc, F.pow(f.lc(), g.deg() - s.deg()));
        g = std::move(s);
        if (g.deg() <= 0) {
            acc = F.mul(acc, F.pow(g.c[0], f.deg()));
            break;
        }
    }
    return negate ? F.neg(acc) : acc;
}

int eta_sign(int n) {
    int r = ((n % 4) + 4) % 4;
    return (r == 0 || r == 1) ? 1 : -1;
}

Fq discriminant(const FieldParams& F, const Poly& f) {
    if (!is_monic(f)) throw std::invalid_argument("discriminant: monic input required");
    if (f.deg() <= 1) return F.one();
    Fq r = resultant(F, f, poly_derivative(F, f));
    return eta_sign(f.deg()) == 1 ? r : F.neg(r);
}

uint64_t monic_count(const FieldParams& F, int i) {
    uint64_t n = 1;
    for (int j = 0; j < i; ++j) n *= F.q();
    return n;
}

void monic_unrank_into(const FieldParams& F, int i, uint64_t k, Poly& out) {
    out.c.assign(i + 1, F.zero());
    out.c[i] = F.one();
    for (int j = 0; j < i; ++j) {
        out.c[j] = F.elem_at((uint32_t)(k % F.q()));
        k /= F.q();
    }
}

Poly monic_unrank(const FieldParams& F, int i, uint64_t k) {
    if (i < 0 || k >= monic_count(F, i)) throw std::out_of_range("monic_unrank: index out of range");
    Poly f;
    monic_unrank_into(F, i, k, f);
    return f;
}

uint64_t monic_rank(const FieldParams& F, const Poly& f) {
    if (!is_monic(f)) throw std::invalid_argument("monic_rank: monic input required");
    uint64_t k = 0;
    for (int j = f.deg(); j-- > 0;) k = k * F.q() + F.lex_index(f.c[j]);
    return k;
}

Poly residue_unrank(const FieldParams& F, int len, uint64_t k) {
    Poly f;
    f.c.assign(len, F.zero());
    for (int j = 0; j < len; ++j) {
        f.c[j] = F.elem_at((uint32_t)(k % F.q()));
        k /= F.q();
    }
    poly_trim(f);
    return f;
}

IrredTable::IrredTable(const FieldParams& F, int max_deg) {
    by_deg_.resize(std::max(max_deg, 0) + 1);
    for (int d = 1; d <= max_deg; ++d) {
        for (uint64_t k = 0; k < monic_count(F, d); ++k) {
            Poly f = monic_unrank(F, d, k);
            bool irred = true;
            for (int dd = 1; irred && dd <= d / 2; ++dd)
                for (const Poly& pi : by_deg_[dd]) {
                    if (poly_mod(F, f, pi).is_zero()) {
                        irred = false;
                        break;
                    }
                }
            if (irred) by_deg_[d].push_back(f);
        }
    }
}

const std::vector<Poly>& IrredTable::of_degree(int d) const {
    if (d < 0 || d >= (int)by_deg_.size()) throw std::out_of_range("IrredTable: degree out of range");
    return by_deg_[d];
}

bool IrredTable::is_irreducible(const FieldParams& F, const Poly& f) const {
    if (f.deg() < 1) return false;
    Poly m = make_monic(F, f);
    for (int dd = 1; dd <= f.deg() / 2; ++dd)
        for (const Poly& pi : of_degree(dd))
            if (poly_mod(F, m, pi).is_zero()) return false;
    return true;
}

FactoredPoly factor(const FieldParams& F, const IrredTable& tbl, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    FactoredPoly out;
    out.unit = f.lc();
    Poly work = make_monic(F, f);
    for (int d = 1; d <= f.deg() / 2 && work.deg() > 0; ++d) {
        if (d > tbl.max_deg()) throw std::logic_error("factor: irreducible table too small");
        for (const Poly& pi : tbl.of_degree(d)) {
            if (work.deg() < pi.deg()) break;
            uint32_t mult = 0;
            for (;;) {
                auto [q, r] = poly_divrem(F, work, pi);
                if (!r.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult) out.factors.push_back({pi, mult});
        }
    }
    if (work.deg() >= 1) out.factors.push_back({work, 1});
    std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return monic_rank(F, a.first) < monic_rank(F, b.first);
    });
    return out;
}

int mobius(const FieldParams& F, const IrredTable& tbl, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("mobius: zero polynomial");
    if (f.deg() == 0) return 1;
    Poly d = poly_derivative(F, f);
    Poly g = d.is_zero() ? make_monic(F, f) : poly_gcd(F, f, d);
    if (g.deg() >= 1) return 0;
    FactoredPoly fac = factor(F, tbl, f);
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

Poly conductor_support(const FieldParams& F, const IrredTable& tbl, const Poly& r, uint32_t n) {
    if (r.is_zero()) throw std::domain_error("conductor_support: zero polynomial");
    if (n < 1) throw std::invalid_argument("conductor_support: n >= 1 required");
    Poly out = poly_one(F);
    for (const auto& [pi, mult] : factor(F, tbl, r).factors)
        if (mult % n != 0) out = poly_mul(F, out, pi);
    return out;
}

Poly parse_poly(const FieldParams& F, const std::string& text) {
    Poly f;
    std::vector<std::string> parts;
    {
        std::string cur;
        int depth = 0;
        for (char ch : text) {
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
    }
    for (const std::string& tok : parts) {
        // field element: integer (prime-subfield for e > 1), or "[a0 a1 ...]"
        size_t lb = tok.find('[');
        if (lb != std::string::npos) {
            size_t rb = tok.find(']');
            if (rb == std::string::npos) throw std::invalid_argument("parse_poly: unbalanced brackets");
            std::istringstream is(tok.substr(lb + 1, rb - lb - 1));
            uint32_t code = 0, pw = 1;
            int64_t digit;
            uint32_t ndig = 0;
            while (is >> digit) {
                if (ndig >= F.e()) throw std::invalid_argument("parse_poly: too many digits");
                int64_t d = digit % F.p();
                if (d < 0) d += F.p();
                code += (uint32_t)d * pw;
                pw *= F.p();
                ++ndig;
            }
            f.c.push_back(Fq{code});
        } else {
            f.c.push_back(F.from_residue(std::stoll(tok)));
        }
    }
    poly_trim(f);
    return f;
}

std::string format_poly(const FieldParams& F, const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t j = 0; j < f.c.size(); ++j) {
        if (j) os << ",";
        if (F.e() == 1) {
            os << f.c[j].code;
        } else {
            os << "[";
            auto d = F.rep(f.c[j]);
            for (uint32_t t = 0; t < F.e(); ++t) {
                if (t) os << " ";
                os << d[t];
            }
            os << "]";
        }
    }
    return os.str();
}

} // namespace selberg
