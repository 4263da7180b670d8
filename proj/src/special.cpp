#include "lgf/special.hpp"

#include <cmath>

#include "lgf/errors.hpp"

namespace lgf {

const char* convention_name(EllipticConvention c) {
    return c == EllipticConvention::modulus ? "modulus" : "parameter";
}

BigFloat agm(const BigFloat& a0, const BigFloat& b0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat a = widen(a0, digits + 10), b = widen(b0, digits + 10), eps = eps_for(digits + 10);
    for (int it = 0; it < 10000; ++it) {
        if (abs(a - b) <= eps * abs(a)) break;
        BigFloat an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return a;
}

BigFloat elliptic_K(const EllipticArg& arg, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat m = widen(arg.value, digits + 10);
    if (arg.convention == EllipticConvention::modulus) m = m * m;
    if (m >= 1) throw Error(ErrorKind::DomainError, "elliptic_K needs m < 1, got m = " + to_string(m, 20));
    return big_pi() / (2 * agm(BigFloat(1), sqrt(1 - m), digits));
}

BigFloat gamma_rational(const Rational& x, unsigned digits) {
    if (sgn(x) <= 0) throw Error(ErrorKind::DomainError, "gamma_rational needs a positive argument");
    PrecisionScope ps(digits + 10);
    BigFloat v = to_big(x), r;
    mpfr_gamma(r.backend().data(), v.backend().data(), MPFR_RNDN);
    return r;
}

BigFloat euler_gamma(unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat g;
    mpfr_const_euler(g.backend().data(), MPFR_RNDN);
    return g;
}

namespace {

// Dense solve with partial pivoting; a is (n x n+1) augmented.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> a) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t i = c + 1; i < n; ++i)
            if (abs(a[i][c]) > abs(a[p][c])) p = i;
        std::swap(a[c], a[p]);
        for (size_t i = c + 1; i < n; ++i) {
            BigFloat f = a[i][c] / a[c][c];
            for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<BigFloat> x(n);
    for (size_t i = n; i-- > 0;) {
        BigFloat s = a[i][n];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

BigFloat extrapolate(const std::vector<BigFloat>& partial, const BigFloat& p, int K) {
    long N = static_cast<long>(partial.size()) - 1;
    long step = std::max<long>(1, N / (2 * (K + 1)));
    std::vector<std::vector<BigFloat>> a;
    for (int j = 0; j <= K; ++j) {
        long n = N - j * step;
        BigFloat inv = BigFloat(1) / BigFloat(n);
        std::vector<BigFloat> row(static_cast<size_t>(K) + 2);
        row[0] = 1;
        BigFloat base = pow(inv, p);
        for (int k = 0; k < K; ++k) {
            row[static_cast<size_t>(k) + 1] = base;
            base *= inv;
        }
        row[static_cast<size_t>(K) + 1] = partial[static_cast<size_t>(n)];
        a.push_back(std::move(row));
    }
    return solve(std::move(a))[0];
}

}  // namespace

Estimate richardson_sum(const std::vector<BigFloat>& terms, const Rational& p, int K, unsigned digits) {
    if (terms.size() < static_cast<size_t>(4 * (K + 2)))
        throw Error(ErrorKind::InsufficientTerms, "too few terms for the tail extrapolation");
    PrecisionScope ps(digits + 40);
    std::vector<BigFloat> partial(terms.size());
    BigFloat s = 0;
    for (size_t i = 0; i < terms.size(); ++i) {
        s += terms[i];
        partial[i] = s;
    }
    BigFloat pp = to_big(p);
    BigFloat hi = extrapolate(partial, pp, K), lo = extrapolate(partial, pp, K - 1);
    BigFloat err = abs(hi - lo) + eps_for(digits) * abs(hi);
    return {hi, err};
}

Estimate pFq_eval(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const BigFloat& x0,
                  unsigned digits) {
    for (const auto& b : lower)
        if (sgn(b) <= 0 && b.get_den() == 1)
            throw Error(ErrorKind::DomainError, "pFq: non-positive integer lower parameter");
    for (const auto& a : upper)
        if (sgn(a) <= 0 && a.get_den() == 1)
            throw Error(ErrorKind::DomainError, "pFq: terminating series, use terminating_hypergeometric");
    PrecisionScope ps(digits + 20);
    BigFloat x = widen(x0, digits + 20);
    BigFloat ax = abs(x), eps = eps_for(digits);
    bool entire = upper.size() <= lower.size();
    bool polynomial_growth = upper.size() == lower.size() + 1;
    if (!entire && !polynomial_growth) {
        if (x != 0) throw Error(ErrorKind::DivergenceError, "pFq with p > q + 1 diverges");
        return {BigFloat(1), BigFloat(0)};
    }
    if (x == 0) return {BigFloat(1), BigFloat(0)};
    auto ratio = [&](long n) {
        BigFloat r = x / BigFloat(n + 1);
        for (const auto& a : upper) r *= to_big(a) + n;
        for (const auto& b : lower) r /= to_big(b) + n;
        return r;
    };
    if (polynomial_growth && ax > 1) throw Error(ErrorKind::DivergenceError, "pFq needs |x| <= 1");
    if (polynomial_growth && ax == 1) {
        Rational s;
        for (const auto& b : lower) s += b;
        for (const auto& a : upper) s -= a;
        if (sgn(s) <= 0) throw Error(ErrorKind::DivergenceError, "pFq at |x| = 1 needs positive parameter excess");
        if (x < 0) throw Error(ErrorKind::DivergenceError, "pFq at x = -1 is not supported");
        long N = 3000 + 20L * digits;
        std::vector<BigFloat> terms(static_cast<size_t>(N) + 1);
        BigFloat t = 1;
        for (long n = 0; n <= N; ++n) {
            terms[static_cast<size_t>(n)] = t;
            t *= ratio(n);
        }
        return richardson_sum(terms, s, 14, digits);
    }
    BigFloat sum = 0, t = 1;
    for (long n = 0;; ++n) {
        sum += t;
        BigFloat r = ratio(n);
        BigFloat R = abs(r);
        if (polynomial_growth && R < ax) R = ax;
        if (R < 1) {
            BigFloat tail = abs(t * r) / (1 - R);
            if (tail <= eps * abs(sum)) return {sum, tail + eps * abs(sum)};
        }
        t *= r;
        if (n > 10'000'000) throw Error(ErrorKind::PrecisionNotMet, "pFq: too many terms");
    }
}

namespace {

unsigned bits_of(unsigned digits) { return digits_to_bits(digits); }

bool use_asymptotic(const BigFloat& x, unsigned digits) { return x > 0.36 * bits_of(digits) + 8; }

// sum_k ((2k-1)!!)^2 / (k! 8^k x^k) (+/-), stopped at the target or the smallest term.
BigFloat asym_sum(const BigFloat& x, bool alternate, unsigned digits) {
    BigFloat s = 1, t = 1, eps = eps_for(digits);
    for (long k = 1; k < 100000; ++k) {
        BigFloat nt = t * BigFloat((2 * k - 1) * (2 * k - 1)) / (BigFloat(8 * k) * x);
        if (nt >= t) break;
        t = nt;
        if (alternate && (k % 2)) s -= t; else s += t;
        if (t < eps * s) break;
    }
    return s;
}

}  // namespace

BigFloat bessel_I0(const BigFloat& x0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat x = abs(widen(x0, digits + 10));
    if (use_asymptotic(x, digits)) return exp(x) / sqrt(2 * big_pi() * x) * asym_sum(x, false, digits + 5);
    BigFloat q = x * x / 4, s = 1, t = 1, eps = eps_for(digits + 5);
    for (long k = 1;; ++k) {
        t *= q / BigFloat(k * k);
        s += t;
        if (t < eps * s) break;
    }
    return s;
}

BigFloat bessel_K0(const BigFloat& x0, unsigned digits) {
    if (x0 <= 0) throw Error(ErrorKind::DomainError, "bessel_K0 needs x > 0");
    if (use_asymptotic(x0, digits)) {
        PrecisionScope ps(digits + 10);
        BigFloat x = widen(x0, digits + 10);
        return sqrt(big_pi() / (2 * x)) * exp(-x) * asym_sum(x, true, digits + 5);
    }
    // the series loses about 2x/ln 10 digits to cancellation
    unsigned guard = static_cast<unsigned>(to_double(x0) * 0.8686) + 15;
    PrecisionScope ps(digits + guard);
    BigFloat x = widen(x0, digits + guard);
    BigFloat q = x * x / 4, t = 1, H = 0, sI = 1, sH = 0, eps = eps_for(digits + guard);
    for (long k = 1;; ++k) {
        t *= q / BigFloat(k * k);
        H += BigFloat(1) / BigFloat(k);
        sI += t;
        sH += t * H;
        if (t * (H + 1) < eps * sI) break;
    }
    return -(log(x / 2) + euler_gamma(digits + guard)) * sI + sH;
}

BigFloat bessel_I0_scaled(const BigFloat& x0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat x = abs(widen(x0, digits + 10));
    if (use_asymptotic(x, digits)) return asym_sum(x, false, digits + 5) / sqrt(2 * big_pi() * x);
    return exp(-x) * bessel_I0(x, digits);
}

BigFloat bessel_K0_scaled(const BigFloat& x0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat x = widen(x0, digits + 10);
    if (x > 0 && use_asymptotic(x, digits)) return sqrt(big_pi() / (2 * x)) * asym_sum(x, true, digits + 5);
    return exp(x) * bessel_K0(x, digits);
}

}  // namespace lgf
