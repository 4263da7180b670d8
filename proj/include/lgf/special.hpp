#pragma once

#include <functional>
#include <vector>

#include "lgf/bigfloat.hpp"

namespace lgf {

// How the argument of K is read: modulus k, or parameter m = k^2.
enum class EllipticConvention { modulus, parameter };

const char* convention_name(EllipticConvention c);

struct EllipticArg {
    BigFloat value;
    EllipticConvention convention;

    static EllipticArg modulus(const BigFloat& k) { return {k, EllipticConvention::modulus}; }
    static EllipticArg parameter(const BigFloat& m) { return {m, EllipticConvention::parameter}; }
    BigFloat m() const { return convention == EllipticConvention::modulus ? value * value : value; }
};

// All evaluators take the working precision in decimal digits and return
// values with relative error below eps_for(digits) unless stated otherwise.

BigFloat agm(const BigFloat& a, const BigFloat& b, unsigned digits);

// K via the AGM: pi / (2 agm(1, sqrt(1 - m))). Throws DomainError for m >= 1.
BigFloat elliptic_K(const EllipticArg& arg, unsigned digits);

// mpfr_gamma is correctly rounded; the only other error is the rounding of
// p/q itself, which perturbs the result by |psi(p/q)| ulp.
BigFloat gamma_rational(const Rational& x, unsigned digits);

BigFloat euler_gamma(unsigned digits);

// Sum of sum_n t_n where t_n is regular and t_n ~ n^(-p-1) (c_0 + c_1/n + ...):
// partial sums S_N = S + sum_k d_k N^(-p-k) are extrapolated from K+1
// cut-offs near N. Error estimate: difference between orders K and K-1.
Estimate richardson_sum(const std::vector<BigFloat>& terms, const Rational& p, int K, unsigned digits);

// pFq by direct summation. For |x| < 1 the tail is bounded geometrically from
// the term ratio once it is below 1 and decreasing; at |x| = 1 the parameter
// excess s = sum(lower) - sum(upper) must be positive and the partial sums
// are extrapolated with the N^(-s-k) corrections. Throws DivergenceError.
Estimate pFq_eval(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const BigFloat& x,
                  unsigned digits);

// Power series for moderate x, the asymptotic expansion once its smallest
// term is below the target; K0 uses guard digits for the cancellation.
BigFloat bessel_I0(const BigFloat& x, unsigned digits);
BigFloat bessel_K0(const BigFloat& x, unsigned digits);
// e^(-x) I0(x) and e^x K0(x), safe for huge x.
BigFloat bessel_I0_scaled(const BigFloat& x, unsigned digits);
BigFloat bessel_K0_scaled(const BigFloat& x, unsigned digits);

}  // namespace lgf
