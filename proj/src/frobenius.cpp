#include "lgf/ode.hpp"

#include <algorithm>
#include <sstream>

namespace lgf {

namespace {

// Truncated series in epsilon of fixed length.
using Eps = std::vector<Rational>;

Eps eps_mul(const Eps& a, const Eps& b) {
    size_t r = a.size();
    Eps c(r);
    for (size_t i = 0; i < r; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; i + j < r; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// P(a + eps) as an eps-series.
Eps taylor(const QPoly& p, const Rational& a, size_t r) {
    QPoly s = p.shifted(a);
    Eps e(r);
    for (size_t i = 0; i < r; ++i) e[i] = s.coeff(static_cast<int>(i));
    return e;
}

// (n + eps)^(-r) / c
Eps inv_power(long n, int r, const Rational& c) {
    Eps e(static_cast<size_t>(r));
    Rational np = 1;
    for (int i = 0; i < r; ++i) np *= n;  // n^r
    Rational term = 1 / (np * c);
    for (int i = 0; i < r; ++i) {
        // (-1)^i binom(r+i-1, i) / n^(r+i)
        e[i] = term * Rational(binomial(r + i - 1, i));
        if (i % 2) e[i] = -e[i];
        term /= n;
    }
    return e;
}

LogSeries wr(const LogSeries& a, const LogSeries& b) { return a * b.theta() - a.theta() * b; }

}  // namespace

FrobeniusBasis frobenius(const ThetaOperator& op, int N) {
    if (!is_mum(op)) throw Error(ErrorKind::NotMUM, "P_0 is not a multiple of theta^r");
    int r = op.order();
    Rational c = op.P(0).lead();
    std::vector<Eps> A(static_cast<size_t>(N) + 1);
    A[0] = Eps(static_cast<size_t>(r));
    A[0][0] = 1;
    for (int n = 1; n <= N; ++n) {
        Eps rhs(static_cast<size_t>(r));
        for (int l = 1; l <= op.degree() && l <= n; ++l) {
            if (op.P(l).is_zero()) continue;
            Eps t = eps_mul(taylor(op.P(l), n - l, r), A[n - l]);
            for (int i = 0; i < r; ++i) rhs[i] -= t[i];
        }
        A[n] = eps_mul(rhs, inv_power(n, r, c));
    }
    FrobeniusBasis fb;
    fb.order = N;
    for (int j = 0; j < r; ++j) {
        PowerSeries s(N);
        for (int n = 0; n <= N; ++n) s[n] = A[n][j];
        fb.A.push_back(std::move(s));
    }
    for (int j = 0; j < r; ++j) {
        std::vector<PowerSeries> parts;
        for (int b = 0; b <= j; ++b) parts.push_back(fb.A[j - b]);
        fb.y.emplace_back(std::move(parts));
    }
    return fb;
}

std::vector<Rational> lambert_from_instantons(const std::vector<Rational>& N, int depth) {
    std::vector<Rational> K(static_cast<size_t>(depth) + 1);
    K[0] = 1;
    for (int k = 1; k <= depth && k < static_cast<int>(N.size()); ++k)
        for (int m = k; m <= depth; m += k) K[m] += Rational(k) * k * k * N[k];
    return K;
}

YukawaData yukawa(const ThetaOperator& op, int N) {
    if (op.order() < 3) throw Error(ErrorKind::NotMUM, "Yukawa coupling needs order >= 3");
    auto fb = frobenius(op, N);
    PowerSeries g = fb.A[1] / fb.A[0];
    PowerSeries h = fb.A[2] / fb.A[0];
    YukawaData y;
    y.q = g.exp().shifted(1).truncated(N);
    y.z_of_q = y.q.reversion();
    PowerSeries F = h - g * g * Rational(1, 2);
    PowerSeries Fq = F.compose(y.z_of_q);
    y.K.assign(static_cast<size_t>(N) + 1, Rational(0));
    y.K[0] = 1;
    for (int n = 1; n <= N; ++n) y.K[n] = Rational(n) * n * Fq[n];
    y.N.assign(static_cast<size_t>(N) + 1, Rational(0));
    y.scale = 1;
    for (int m = 1; m <= N; ++m) {
        Rational s = y.K[m];
        for (int k = 1; k < m; ++k)
            if (m % k == 0) s -= Rational(k) * k * k * y.N[k];
        y.N[m] = s / (Rational(m) * m * m);
        mpz_lcm(y.scale.get_mpz_t(), y.scale.get_mpz_t(), y.N[m].get_den_mpz_t());
    }
    return y;
}

Report wronskian_cy_check(const ThetaOperator& op, int N) {
    if (op.order() != 4) throw Error(ErrorKind::NotMUM, "Wronskian check needs an order-4 operator");
    auto fb = frobenius(op, N);
    const auto& y = fb.y;
    LogSeries d = wr(y[0], y[3]) - wr(y[1], y[2]);
    int first = -1;
    for (const auto& p : d.parts())
        for (int n = 0; n <= p.order(); ++n)
            if (sgn(p[n]) != 0) {
                if (first < 0 || n < first) first = n;
                break;
            }
    if (first >= 0) return Report::fail(first, "w03 - w12 nonzero at x^" + std::to_string(first));
    return Report::pass("w03 = w12 through x^" + std::to_string(d.order()));
}

CyConditions cy_conditions_report(const ThetaOperator& op, int N) {
    CyConditions c;
    std::ostringstream os;
    c.mum = is_mum(op) && op.order() == 4;
    auto ind = indicial(op);
    os << "exponents at 0:";
    for (const auto& e : ind.at_zero) os << ' ' << to_string(e);
    if (ind.irrational_at_zero) os << " (+" << ind.irrational_at_zero << " irrational)";
    os << "; at infinity:";
    for (const auto& e : ind.at_infinity) os << ' ' << to_string(e);
    if (ind.irrational_at_infinity) os << " (+" << ind.irrational_at_infinity << " irrational)";
    c.indicial_infinity = ind.condition_three;
    if (!c.mum) {
        os << "; not MUM, remaining conditions skipped";
        c.detail = os.str();
        return c;
    }
    c.wronskian = wronskian_cy_check(op, std::min(N, 25)).ok;
    auto fb = frobenius(op, N);
    c.integral_y0 = is_integral(fb.A[0], N);
    auto yk = yukawa(op, N);
    c.integral_q = is_integral(yk.q, N);
    // denominators must stop growing: the lcm over k <= depth/2 already covers k <= depth
    int depth = std::min(static_cast<int>(yk.N.size()) - 1, std::max(8, N / 2));
    Integer full = 1, half = 1;
    for (int k = 1; k <= depth && k <= N; ++k) {
        mpz_lcm(full.get_mpz_t(), full.get_mpz_t(), yk.N[k].get_den_mpz_t());
        if (k <= depth / 2) half = full;
    }
    c.scale = full;
    c.bounded_instantons = full == half;
    os << "; instanton denominators lcm " << full.get_str() << " up to k = " << depth;
    c.detail = os.str();
    return c;
}

}  // namespace lgf
