#include <doctest.h>

#include <random>

#include "lgf/constant_term.hpp"

using namespace lgf;

TEST_CASE("canonical kernels") {
    auto sq = kernel(Family::square, 2);
    CHECK(sq.kernel.size() == 4);
    auto f4 = kernel(Family::fcc, 4);
    CHECK(f4.kernel.size() == 24);
    for (const auto& [e, c] : f4.kernel.terms()) CHECK(c == 1);
    auto d2 = kernel(Family::diamond, 2);
    CHECK(d2.kernel.eval_at_ones() == 9);
    for (int d = 3; d <= 5; ++d) {
        CHECK(kernel(Family::sc, d).kernel.eval_at_ones() == 2 * d);
        CHECK(kernel(Family::bcc, d).kernel.eval_at_ones() == (1 << d));
    }
}

TEST_CASE("constant terms of powers") {
    CHECK(ct_power(kernel(Family::square, 2), 2) == 4);
    CHECK(ct_power(kernel(Family::bcc, 3), 2) == 8);
    CHECK(ct_power(kernel(Family::honeycomb, 2), 2) == 15);
    CHECK(ct_series(Family::fcc, 3, 2).values[2] == 12);
    CHECK(ct_series(Family::fcc, 5, 2).values[2] == 40);
    auto d4 = ct_series(Family::diamond, 4, 10).values;
    auto s5 = multinomial_sq_table(10, 5);
    CHECK(d4 == s5);
}

TEST_CASE("pruned and unpruned paths agree") {
    auto k = kernel(Family::fcc, 3);
    auto mitm = ct_powers(k, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(ct_power(k, n, true) == mitm[n]);
        CHECK(ct_power(k, n, false) == mitm[n]);
    }
}

TEST_CASE("kernel equivalences") {
    CHECK(kernel_equivalence(kernel(Family::square, 2), square_product_kernel(), 10).ok);
    CHECK(kernel_equivalence(kernel(Family::diamond, 3), diamond3_printed_kernel(), 12).ok);
    CHECK(kernel_equivalence(kernel(Family::diamond, 4), diamond4_printed_kernel(), 10).ok);
    CHECK_FALSE(kernel_equivalence(kernel(Family::sc, 3), kernel(Family::bcc, 3), 4).ok);
}

TEST_CASE("resource limit") {
    bool threw = false;
    try {
        ct_series(Family::sc, 4, 20, CtLimits{100});
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::ResourceLimit;
    }
    CHECK(threw);
}

TEST_CASE("kernel text round trip") {
    auto k = kernel(Family::fcc, 3).kernel;
    CHECK(parse_kernel(k.to_text()) == k);
    bool threw = false;
    try {
        parse_kernel("1 2 x\n");
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::ParseError;
    }
    CHECK(threw);
}

TEST_CASE("property: CT of a product of disjoint factors is the product of CTs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> ex(-2, 2), co(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly a(2), b(2);
        for (int i = 0; i < 4; ++i) {
            a.add({ex(rng), 0}, co(rng));
            b.add({0, ex(rng)}, co(rng));
        }
        LaurentPoly ab = a * b;
        CHECK(ab.constant_term() == a.constant_term() * b.constant_term());
        CHECK(ab.eval_at_ones() == a.eval_at_ones() * b.eval_at_ones());
    }
}
