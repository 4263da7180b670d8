#pragma once

#include <string>
#include <vector>

#include "lgf/bigfloat.hpp"

namespace lgf {

// a + b sqrt(3), a and b rational.
struct Surd {
    Rational a, b;
    Surd(Rational x = 0, Rational y = 0) : a(std::move(x)), b(std::move(y)) {}
    friend Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
    friend Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
    friend Surd operator*(const Surd& x, const Surd& y) {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const Surd& x, const Surd& y) { return x.a == y.a && x.b == y.b; }
    BigFloat eval(unsigned digits) const;
    std::string to_string() const;
};

enum class RamanujanId { diam32, diam64, diam_sqrt3, sc484, bcc256, bcc4096 };

const char* ramanujan_name(RamanujanId id);
RamanujanId parse_ramanujan(const std::string& s);  // throws ParseError
std::vector<RamanujanId> all_ramanujan();

// sum_n (A n + B) x^n c_n = T / pi, with A, B, x, T in Q(sqrt3).
struct RamanujanSeries {
    RamanujanId id;
    Surd A, B, x, target_over_pi;
    std::string coefficients;  // description of c_n
};
RamanujanSeries ramanujan_series(RamanujanId id);

struct RamanujanResult {
    Surd exact_partial;
    BigFloat sum, target, error;  // error = |sum - target|
};
// Partial sum of `terms` terms, exact in Q(sqrt3), converted at the end.
RamanujanResult ramanujan_eval(RamanujanId id, int terms, unsigned digits);

// alpha f(y) + beta (theta f)(y) - 1/pi with f = sum C(2n,n) S_n^(3) y^n,
// y = (z0/6)^2 < 0 for z0 = (3/11)(5 sqrt3 - 8) i, alpha = (1104 - 591 sqrt3)/242,
// beta = 20(64 - 29 sqrt3)/121.
struct GeneralFormResult {
    BigFloat residual;
    BigFloat f, theta_f;
    bool termwise_consistent = false;  // (A n + B)/T = alpha + beta n for the sc-484 series
};
GeneralFormResult ramanujan_general_form_check(unsigned digits, int terms = 120, double alpha_shift = 0);

}  // namespace lgf
