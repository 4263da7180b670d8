#pragma once

#include <string>
#include <vector>

#include "lgf/series.hpp"

namespace lgf {

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> c);
    QPoly(std::initializer_list<long> c);
    static QPoly monomial(const Rational& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    QPoly shifted(const Rational& a) const;  // p(x + a)
    int valuation() const;                  // multiplicity of the root 0

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const Rational& s);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly gcd(QPoly a, QPoly b);  // monic

// Rational roots with multiplicity, plus how many roots (with multiplicity)
// are not rational.
struct RootSet {
    std::vector<Rational> rational;
    int irrational = 0;
};
RootSet rational_roots(const QPoly& p);

// Reduced quotient of polynomials with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_{1} {}
    RatFunc(QPoly num) : num_(std::move(num)), den_{1} {}
    RatFunc(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    RatFunc derivative() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    QPoly num_, den_;
};

}  // namespace lgf
