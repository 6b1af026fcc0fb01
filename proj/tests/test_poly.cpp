#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "selberg/poly.hpp"

using namespace selberg;

static Poly P(const FieldParams& F, std::initializer_list<int64_t> coeffs) {
    Poly f;
    for (auto v : coeffs) f.c.push_back(F.from_residue(v));
    poly_trim(f);
    return f;
}

TEST_CASE("basic arithmetic") {
    auto F = FieldParams::make(5, 1);
    CHECK(poly_derivative(F, P(F, {1, 0, 1})) == P(F, {0, 2}));
    CHECK(poly_gcd(F, P(F, {-1, 0, 1}), P(F, {-1, 1})) == P(F, {-1, 1}));
    auto [q, r] = poly_divrem(F, P(F, {0, 0, 0, 1}), P(F, {1, 0, 1}));
    CHECK(q == P(F, {0, 1}));
    CHECK(r == P(F, {0, -1}));
    CHECK_THROWS_AS(poly_divrem(F, P(F, {1}), poly_zero()), std::domain_error);
    CHECK(poly_eval(F, P(F, {1, 2, 1}), F.from_residue(2)) == F.from_residue(9));
    CHECK(poly_compose(F, P(F, {0, 0, 1}), P(F, {1, 1})) == P(F, {1, 2, 1}));
}

TEST_CASE("resultant examples") {
    auto F = FieldParams::make(5, 1);
    // R(x - a, f) = f(a) for all a and f of degree <= 3
    for (uint64_t k = 0; k < monic_count(F, 3); ++k) {
        Poly f = monic_unrank(F, 3, k);
        for (uint32_t a = 0; a < 5; ++a) {
            Poly lin = P(F, {-(int64_t)a, 1});
            CHECK(resultant(F, lin, f) == poly_eval(F, f, Fq{a}));
        }
    }
    CHECK(resultant(F, P(F, {1, 0, 1}), P(F, {0, 2})) == F.from_residue(4));
    for (uint64_t k = 0; k < monic_count(F, 2); ++k) {
        Poly f = monic_unrank(F, 2, k);
        CHECK(F.is_zero(resultant(F, f, f)));
    }
}

TEST_CASE("resultant agrees with the Sylvester oracle") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}}) {
        auto F = FieldParams::make(p, e);
        // all pairs of polynomials of degree <= 3 with arbitrary leading coefficients
        for (int df = 0; df <= 3; ++df)
            for (int dg = 0; dg <= 3; ++dg)
                for (uint64_t kf = 0; kf < monic_count(F, df); ++kf)
                    for (uint64_t kg = 0; kg < monic_count(F, dg); ++kg) {
                        Poly f = monic_unrank(F, df, kf);
                        Poly g = monic_unrank(F, dg, kg);
                        // scale to non-monic as well
                        Poly f2 = poly_scale(F, F.from_residue(2), f);
                        CHECK(resultant(F, f, g) == oracle::sylvester_resultant(F, f, g));
                        CHECK(resultant(F, f2, g) == oracle::sylvester_resultant(F, f2, g));
                    }
    }
}

TEST_CASE("bimultiplicativity and reciprocity") {
    auto F = FieldParams::make(5, 1);
    for (uint64_t kf = 0; kf < monic_count(F, 2); ++kf)
        for (uint64_t kg = 0; kg < monic_count(F, 2); ++kg)
            for (uint64_t kh = 0; kh < monic_count(F, 2); ++kh) {
                Poly f = monic_unrank(F, 2, kf);
                Poly g = monic_unrank(F, 2, kg);
                Poly h = monic_unrank(F, 2, kh);
                CHECK(resultant(F, f, poly_mul(F, g, h)) == F.mul(resultant(F, f, g), resultant(F, f, h)));
                CHECK(resultant(F, poly_mul(F, f, g), h) == F.mul(resultant(F, f, h), resultant(F, g, h)));
            }
    for (int df = 1; df <= 3; ++df)
        for (int dg = 1; dg <= 3; ++dg)
            for (uint64_t kf = 0; kf < monic_count(F, df); kf += 3)
                for (uint64_t kg = 0; kg < monic_count(F, dg); kg += 3) {
                    Poly f = monic_unrank(F, df, kf);
                    Poly g = monic_unrank(F, dg, kg);
                    Fq lhs = resultant(F, g, f);
                    Fq rhs = resultant(F, f, g);
                    if ((df * dg) % 2) rhs = F.neg(rhs);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("discriminant") {
    auto F = FieldParams::make(5, 1);
    CHECK(discriminant(F, P(F, {3, 1})) == F.one());
    CHECK(discriminant(F, P(F, {1})) == F.one());
    // D(x^2 + bx + c) = b^2 - 4c
    for (uint32_t b = 0; b < 5; ++b)
        for (uint32_t c = 0; c < 5; ++c) {
            Poly f = P(F, {(int64_t)c, (int64_t)b, 1});
            Fq want = F.sub(F.mul(Fq{b}, Fq{b}), F.mul(F.from_residue(4), Fq{c}));
            CHECK(discriminant(F, f) == want);
        }
    CHECK(F.is_zero(discriminant(F, P(F, {0, 0, 1}))));
    CHECK_THROWS_AS(discriminant(F, P(F, {1, 2})), std::invalid_argument);
    // eta sign
    CHECK(eta_sign(0) == 1);
    CHECK(eta_sign(1) == 1);
    CHECK(eta_sign(2) == -1);
    CHECK(eta_sign(3) == -1);
    CHECK(eta_sign(4) == 1);
}

TEST_CASE("product rule for discriminants of coprime factors") {
    // D(c1 pi) = D(c1) D(pi) R(c1, pi)^2 for coprime monic pairs
    auto F = FieldParams::make(5, 1);
    for (int d1 = 1; d1 <= 2; ++d1)
        for (int d2 = 1; d2 <= 2; ++d2)
            for (uint64_t k1 = 0; k1 < monic_count(F, d1); ++k1)
                for (uint64_t k2 = 0; k2 < monic_count(F, d2); ++k2) {
                    Poly a = monic_unrank(F, d1, k1);
                    Poly b = monic_unrank(F, d2, k2);
                    if (poly_gcd(F, a, b).deg() != 0) continue;
                    Fq lhs = discriminant(F, poly_mul(F, a, b));
                    Fq r = resultant(F, a, b);
                    Fq rhs = F.mul(F.mul(discriminant(F, a), discriminant(F, b)), F.mul(r, r));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("monic rank/unrank") {
    auto F = FieldParams::make(5, 1);
    CHECK(monic_unrank(F, 0, 0) == poly_one(F));
    CHECK(monic_unrank(F, 1, 0) == poly_x(F));
    for (int i = 0; i <= 3; ++i)
        for (uint64_t k = 0; k < monic_count(F, i); ++k) CHECK(monic_rank(F, monic_unrank(F, i, k)) == k);
    CHECK_THROWS_AS(monic_unrank(F, 1, 5), std::out_of_range);
}

TEST_CASE("factorization and mobius") {
    auto F = FieldParams::make(5, 1);
    IrredTable tbl(F, 2);
    // x^2 - 1 = (x-1)(x+1)
    auto fac = factor(F, tbl, P(F, {-1, 0, 1}));
    CHECK(fac.factors.size() == 2);
    CHECK(fac.unit == F.one());
    // 2x = 2 * x
    auto fac2 = factor(F, tbl, P(F, {0, 2}));
    CHECK(fac2.unit == F.from_residue(2));
    CHECK(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].first == poly_x(F));

    auto F3 = FieldParams::make(3, 1);
    IrredTable tbl3(F3, 2);
    Poly f = P(F3, {1, 0, 1}); // x^2 + 1, irreducible over F_3
    auto fac3 = factor(F3, tbl3, f);
    CHECK(fac3.factors.size() == 1);
    CHECK(fac3.factors[0].second == 1);
    CHECK(tbl3.is_irreducible(F3, f));

    CHECK(mobius(F, tbl, P(F, {0, 0, 1})) == 0);
    CHECK(mobius(F, tbl, P(F, {0, -1, 1})) == 1); // x(x-1)
    CHECK(mobius(F, tbl, poly_x(F)) == -1);
    CHECK(mobius(F, tbl, P(F, {2})) == 1);
    CHECK_THROWS_AS(mobius(F, tbl, poly_zero()), std::domain_error);
}

TEST_CASE("Pellet's formula mu(f) = (-1)^deg omega(D(f))") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        auto F = FieldParams::make(p, e);
        IrredTable tbl(F, 2);
        for (int d = 0; d <= 4; ++d)
            for (uint64_t k = 0; k < monic_count(F, d); ++k) {
                Poly f = monic_unrank(F, d, k);
                int mu = mobius(F, tbl, f);
                Fq D = discriminant(F, f);
                int omega_D = F.is_zero(D) ? 0 : (F.dlog(D) % 2 == 0 ? 1 : -1);
                int rhs = (d % 2 ? -1 : 1) * omega_D;
                CHECK(mu == rhs);
            }
    }
}

TEST_CASE("conductor support") {
    auto F = FieldParams::make(5, 1);
    IrredTable tbl(F, 4);
    Poly r = poly_mul(F, poly_pow(F, poly_x(F), 3),
                      poly_mul(F, poly_pow(F, P(F, {-1, 1}), 4), P(F, {-2, 1})));
    Poly want = poly_mul(F, poly_x(F), P(F, {-2, 1}));
    CHECK(conductor_support(F, tbl, r, 4) == want);
    CHECK(conductor_support(F, tbl, poly_pow(F, poly_x(F), 4), 4) == poly_one(F));
    CHECK(conductor_support(F, tbl, r, 1) == poly_one(F));
}

TEST_CASE("irreducible counts match the necklace formula") {
    // number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(e) q^{d/e}
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        auto F = FieldParams::make(p, e);
        IrredTable tbl(F, 3);
        uint64_t q = F.q();
        CHECK(tbl.of_degree(1).size() == q);
        CHECK(tbl.of_degree(2).size() == (q * q - q) / 2);
        CHECK(tbl.of_degree(3).size() == (q * q * q - q) / 3);
    }
}

TEST_CASE("poly text syntax") {
    auto F = FieldParams::make(5, 1);
    CHECK(parse_poly(F, "0,0,1") == P(F, {0, 0, 1}));
    CHECK(parse_poly(F, "-1,1") == P(F, {4, 1}));
    CHECK(format_poly(F, P(F, {4, 1})) == "4,1");
    auto F9 = FieldParams::make(3, 2);
    Poly g = parse_poly(F9, "[1 2],[0 1]");
    CHECK(g.c.size() == 2);
    CHECK(g.c[0].code == 1 + 2 * 3);
    CHECK(g.c[1].code == 3);
    CHECK(parse_poly(F9, format_poly(F9, g)) == g);
}
