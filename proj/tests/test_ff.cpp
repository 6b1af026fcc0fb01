#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "selberg/ff.hpp"

using namespace selberg;

TEST_CASE("make: q=5 has generator 2") {
    auto F = FieldParams::make(5, 1);
    CHECK(F.q() == 5);
    CHECK(F.gen().code == 2);
}

TEST_CASE("make: q=9 picks modulus x^2+1") {
    auto F = FieldParams::make(3, 2);
    CHECK(F.q() == 9);
    std::vector<uint32_t> want = {1, 0, 1};
    CHECK(F.modulus() == want);
}

TEST_CASE("make: q=3 generator 2") {
    auto F = FieldParams::make(3, 1);
    CHECK(F.gen().code == 2);
}

TEST_CASE("make rejects bad input") {
    CHECK_THROWS_AS(FieldParams::make(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(3, 2, 8), std::invalid_argument);
}

TEST_CASE("arith basics") {
    auto F = FieldParams::make(5, 1);
    CHECK(F.inv(Fq{2}) == Fq{3});
    CHECK(F.pow(F.gen(), F.q() - 1) == F.one());
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);

    auto F9 = FieldParams::make(3, 2);
    // x * x = -1 = 2 with modulus x^2 + 1; x has code 3 (digits 0,1)
    Fq x{3};
    CHECK(F9.mul(x, x) == F9.from_residue(-1));
}

TEST_CASE("dlog basics") {
    auto F = FieldParams::make(5, 1);
    CHECK(F.dlog(F.one()) == 0);
    CHECK(F.dlog(Fq{4}) == 2);
    CHECK(F.dlog(F.gen()) == 1);
    CHECK_THROWS_AS(F.dlog(F.zero()), std::domain_error);
}

TEST_CASE("trace basics") {
    auto F5 = FieldParams::make(5, 1);
    for (uint32_t a = 0; a < 5; ++a) CHECK(F5.trace(Fq{a}) == a);
    auto F9 = FieldParams::make(3, 2);
    CHECK(F9.trace(F9.zero()) == 0);
    CHECK(F9.trace(Fq{3}) == 0); // Tr(x) = x + x^3 = 0 with x^2 = -1
}

static void exhaustive_field_laws(uint32_t p, uint32_t e) {
    auto F = FieldParams::make(p, e);
    uint32_t q = F.q();
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            for (uint32_t c = 0; c < q; ++c) {
                Fq A{a}, B{b}, C{c};
                CHECK(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
                CHECK(F.add(F.add(A, B), C) == F.add(A, F.add(B, C)));
                CHECK(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
            }
    for (uint32_t a = 1; a < q; ++a) CHECK(F.mul(Fq{a}, F.inv(Fq{a})) == F.one());
}

TEST_CASE("exhaustive field laws on the small grid") {
    exhaustive_field_laws(5, 1);
    exhaustive_field_laws(3, 2);
    exhaustive_field_laws(7, 1);
    exhaustive_field_laws(5, 2);
    exhaustive_field_laws(7, 2);
    exhaustive_field_laws(3, 3);
}

TEST_CASE("dlog is a group isomorphism") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}, {13, 1}}) {
        auto F = FieldParams::make(p, e);
        for (uint32_t a = 1; a < F.q(); ++a)
            for (uint32_t b = 1; b < F.q(); ++b)
                CHECK((F.dlog(Fq{a}) + F.dlog(Fq{b})) % (F.q() - 1) == F.dlog(F.mul(Fq{a}, Fq{b})));
    }
}

TEST_CASE("trace is F_p-linear and surjective") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
        auto F = FieldParams::make(p, e);
        std::vector<bool> hit(p, false);
        for (uint32_t a = 0; a < F.q(); ++a) {
            hit[F.trace(Fq{a})] = true;
            for (uint32_t b = 0; b < F.q(); ++b) {
                uint32_t lhs = F.trace(F.add(Fq{a}, Fq{b}));
                CHECK(lhs == (F.trace(Fq{a}) + F.trace(Fq{b})) % p);
            }
            // scaling by prime-subfield elements
            for (uint32_t t = 0; t < p; ++t) {
                uint32_t lhs = F.trace(F.mul(F.from_residue(t), Fq{a}));
                CHECK(lhs == t * F.trace(Fq{a}) % p);
            }
        }
        for (uint32_t t = 0; t < p; ++t) CHECK(hit[t]);
    }
}

TEST_CASE("generator order and dlog table invariants") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}, {7, 1}, {13, 1}, {3, 3}}) {
        auto F = FieldParams::make(p, e);
        Fq cur = F.one();
        for (uint32_t k = 0; k + 1 < F.q(); ++k) {
            CHECK(F.dlog(cur) == k);
            CHECK(F.exp_g(k) == cur);
            if (k > 0) CHECK(cur != F.one());
            cur = F.mul(cur, F.gen());
        }
        CHECK(cur == F.one());
    }
}

TEST_CASE("lex order roundtrip") {
    auto F = FieldParams::make(3, 2);
    for (uint32_t i = 0; i < F.q(); ++i) CHECK(F.lex_index(F.elem_at(i)) == i);
    // lex order on rep vectors (a0, a1): a0 compared first
    CHECK(F.elem_at(0) == F.zero());
    CHECK(F.rep(F.elem_at(1)) == std::vector<uint32_t>{0, 1});
    CHECK(F.rep(F.elem_at(3)) == std::vector<uint32_t>{1, 0});
}
