#include <doctest.h>

#include "lgf/lattice.hpp"
#include "lgf/ode.hpp"

using namespace lgf;

namespace {

PowerSeries table(Family f, int d, int N) {
    auto t = coeffs(make_spec(f, d), N).values;
    return PowerSeries::from_range(t.begin(), t.end());
}

PowerSeries central_binomial_power(int d, int N) {
    std::vector<Rational> c;
    for (int n = 0; n <= N; ++n) {
        Integer b = binomial(2 * n, n), p = 1;
        for (int i = 0; i < d; ++i) p *= b;
        c.emplace_back(p);
    }
    return PowerSeries(c);
}

}  // namespace

TEST_CASE("registry shapes") {
    auto bcc4 = registry("bcc4");
    CHECK(bcc4.order() == 4);
    CHECK(bcc4.degree() == 1);
    // theta^4 - 16 x (2 theta + 1)^4
    CHECK(bcc4.P(0) == QPoly{0, 0, 0, 0, 1});
    CHECK(bcc4.P(1) == QPoly{-16, -128, -384, -512, -256});
    auto fcc4 = registry("fcc4");
    CHECK(fcc4.degree() == 7);
    // leading polynomial proportional to (theta+1)(theta+2)^2(theta+3)
    auto roots = rational_roots(fcc4.P(7));
    CHECK(roots.rational.size() == 4);
    CHECK(roots.irrational == 0);
    bool threw = false;
    try {
        registry("nope");
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::UnknownOperator;
    }
    CHECK(threw);
}

TEST_CASE("apply") {
    ThetaOperator th({QPoly{0, 1}});
    CHECK(apply(th, PowerSeries{0, 1, 0}) == PowerSeries{0, 1, 0});
    for (int n = 0; n < 5; ++n) {
        ThetaOperator shift({QPoly{-n, 1}});
        std::vector<Rational> c(6);
        c[static_cast<size_t>(n)] = 1;
        CHECK(apply(shift, PowerSeries(c)).is_zero());
    }
}

TEST_CASE("annihilation") {
    CHECK(annihilates(registry("bcc4"), central_binomial_power(4, 40)).ok);
    CHECK(annihilates(registry("sc4"), table(Family::sc, 4, 30)).ok);
    CHECK(annihilates(registry("diamond4"), table(Family::diamond, 4, 30)).ok);
    CHECK(annihilates(registry("fcc4"), table(Family::fcc, 4, 30)).ok);
    CHECK(annihilates(registry("iwan5"), central_binomial_power(5, 30)).ok);
    auto sc3 = table(Family::sc, 3, 30);
    CHECK(annihilates(registry("sc3"), sc3).ok);
    CHECK_FALSE(annihilates(registry("bcc4"), table(Family::sc, 4, 20)).ok);
}

TEST_CASE("operator text round trip") {
    auto op = registry("diamond4");
    CHECK(parse_operator(op.to_text()).equivalent(op));
    CHECK(op.rescaled(2).rescaled(Rational(1, 2)).equivalent(op));
}

TEST_CASE("fitting") {
    auto op = fit_ode(central_binomial_power(4, 20), 4, 1);
    REQUIRE(op.has_value());
    CHECK(op->equivalent(registry("bcc4")));
    auto d = fit_ode(table(Family::diamond, 4, 40), 4, 3);
    REQUIRE(d.has_value());
    CHECK(d->equivalent(registry("diamond4")));
    // too few terms for the requested shape
    bool threw = false;
    try {
        fit_ode(central_binomial_power(4, 5), 4, 1);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::InsufficientTerms;
    }
    CHECK(threw);
    CHECK_FALSE(fit_ode(table(Family::sc, 4, 30), 2, 1).has_value());
}

TEST_CASE("indicial equations") {
    auto ind = indicial(registry("bcc4"));
    CHECK(ind.mum);
    CHECK(ind.at_zero == std::vector<Rational>(4, Rational(0)));
    CHECK(ind.at_infinity == std::vector<Rational>(4, Rational(1, 2)));
    CHECK(ind.condition_three);
    CHECK(is_mum(registry("iwan5")));
    CHECK(registry("iwan5").order() == 5);
}

TEST_CASE("Frobenius basis") {
    auto fb = frobenius(registry("sc4"), 12);
    auto sc4 = table(Family::sc, 4, 12);
    CHECK(fb.A[0].truncated(12) == sc4);
    CHECK(fb.A[1][0] == 0);
    for (const auto& y : fb.y) CHECK(apply(registry("sc4"), y).is_zero());
    // a_1(e) = 16 (1 + 2e)^4 / (1 + e)^4, so A_1[1] = a_1'(0) = 16 (8 - 4)
    auto fbb = frobenius(registry("bcc4"), 4);
    CHECK(fbb.A[1][1] == 64);
}

TEST_CASE("Yukawa coupling") {
    auto y = yukawa(registry("sc4"), 6);
    CHECK(y.K[0] == 1);
    CHECK(y.K[1] == 4);
    CHECK(y.K[2] == 164);
    CHECK(y.q[1] == 1);
    CHECK(y.scale == 3);
    auto back = lambert_from_instantons(y.N, 6);
    for (int k = 1; k <= 6; ++k) CHECK(back[k] == y.K[k]);
    // rescaling x by lambda scales K_k by lambda^k
    auto s = yukawa(registry("sc4").rescaled(2), 6);
    for (int k = 0; k <= 5; ++k) CHECK(s.K[k] == y.K[k] * (Integer(1) << k));
}

TEST_CASE("Calabi-Yau conditions") {
    CHECK(cy_conditions_report(registry("sc4"), 20).all());
    CHECK(cy_conditions_report(registry("bcc4"), 20).all());
}

TEST_CASE("Wronskian identity and negative control") {
    CHECK(wronskian_cy_check(registry("bcc4"), 25).ok);
    CHECK(wronskian_cy_check(registry("diamond4"), 25).ok);
    auto polys = registry("bcc4").polys();
    std::vector<Rational> c = polys[1].coeffs();
    c[1] += 1;
    polys[1] = QPoly(c);
    CHECK_FALSE(wronskian_cy_check(ThetaOperator(polys, "perturbed"), 25).ok);
}

TEST_CASE("fifth-order Wronskian operator") {
    // the degree search for the fifth-order operator needs about 40 coefficients
    auto f = wronskian_fifth_order(registry("bcc4"), 40);
    CHECK(f.w0_log_free);
    CHECK(f.ok());
    CHECK(f.recovered.order() >= 20);
    bool threw = false;
    try {
        wronskian_fifth_order(registry("bcc4"), 12);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::FitFailure || e.kind() == ErrorKind::InsufficientTerms;
    }
    CHECK(threw);
}

TEST_CASE("symmetric square") {
    auto s = symmetric_square_check(sc3_dform());
    CHECK(s.ok);
    CHECK(s.Q == RatFunc(QPoly{-12, 3}, QPoly{0, 144, -160, 16}));
    // theta^3 - x(theta^3 + theta + 1) is not a symmetric square
    ThetaOperator bad({QPoly{0, 0, 0, 1}, QPoly{-1, -1, 0, -1}});
    CHECK_FALSE(symmetric_square(to_dform(bad)).ok);
    bool threw = false;
    try {
        symmetric_square_check(to_dform(bad));
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::NotSymmetricSquare;
    }
    CHECK(threw);
}

TEST_CASE("triple operators") {
    auto a = frobenius(triple_operator(2, 11, 3, -1), 20).A[0];
    CHECK(a[1] == 3);
    CHECK(is_integral(a, 20));
    auto b = frobenius(triple_operator(3, 17, 5, 1), 20).A[0];
    CHECK(b[1] == 5);
    CHECK(b[2] == 73);  // Apery numbers for zeta(3)
    CHECK(is_integral(b, 20));
}

TEST_CASE("Moebius pullback") {
    auto g = moebius_pullback(PowerSeries::geometric(8), 1);
    for (int n = 0; n <= 8; ++n) CHECK(g[n] == Rational(Integer(1) << n));
    auto f = table(Family::sc, 4, 8);
    CHECK(moebius_pullback(f, 0) == f);
}
