#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "lgf/errors.hpp"

namespace lgf {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);  // zero outside 0 <= k <= n
Integer factorial(unsigned long n);
std::string to_string(const Rational& q);

// Truncated power series with exact rational coefficients, valid for
// indices 0..order().
class PowerSeries {
public:
    explicit PowerSeries(int order = 0);
    explicit PowerSeries(std::vector<Rational> coeffs);
    PowerSeries(std::initializer_list<long> coeffs);

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries variable(int order);  // z
    static PowerSeries geometric(int order);  // 1/(1-z)
    template <class It>
    static PowerSeries from_range(It first, It last) {
        std::vector<Rational> v;
        for (; first != last; ++first) v.emplace_back(*first);
        return PowerSeries(std::move(v));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[n]; }
    Rational& operator[](int n) { return c_[n]; }
    Rational coeff(int n) const;  // zero for n < 0; throws past the order
    const std::vector<Rational>& coeffs() const { return c_; }

    PowerSeries truncated(int order) const;
    bool is_zero() const;
    int valuation() const;  // index of first nonzero, or order()+1

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& b);
    PowerSeries& operator-=(const PowerSeries& b);
    PowerSeries& operator*=(const Rational& s);

    PowerSeries shifted(int k) const;  // z^k * f, exact to order()+k
    PowerSeries theta() const;         // z d/dz
    PowerSeries derivative() const;    // order drops by one
    PowerSeries integral() const;      // zero constant term, order grows by one

    PowerSeries inverse() const;
    PowerSeries exp() const;
    PowerSeries log() const;
    PowerSeries sqrt() const;  // needs a square rational constant term
    PowerSeries reversion() const;
    PowerSeries compose(const PowerSeries& inner) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<Rational> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const Rational& s);
PowerSeries operator*(const Rational& s, PowerSeries a);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
inline PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) { return a / b; }
inline PowerSeries series_exp(const PowerSeries& a) { return a.exp(); }
inline PowerSeries series_log(const PowerSeries& a) { return a.log(); }
inline PowerSeries series_reversion(const PowerSeries& a) { return a.reversion(); }
inline PowerSeries series_compose(const PowerSeries& a, const PowerSeries& b) { return a.compose(b); }

// sum_j parts[j] * log(z)^j / j!
class LogSeries {
public:
    LogSeries() : parts_{PowerSeries(0)} {}
    explicit LogSeries(PowerSeries f) : parts_{std::move(f)} {}
    explicit LogSeries(std::vector<PowerSeries> parts);

    int order() const;
    int log_degree() const { return static_cast<int>(parts_.size()) - 1; }
    const PowerSeries& part(int j) const { return parts_[j]; }
    PowerSeries part_or_zero(int j) const;
    const std::vector<PowerSeries>& parts() const { return parts_; }

    bool is_zero() const;
    bool is_log_free() const { return parts_.size() == 1; }

    LogSeries theta() const;
    LogSeries shifted(int k) const;
    LogSeries truncated(int order) const;

    LogSeries operator-() const;
    friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const LogSeries& a, const Rational& s);

private:
    void canonicalize();
    std::vector<PowerSeries> parts_;
};

}  // namespace lgf
