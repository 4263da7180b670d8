#include "lgf/ode.hpp"

#include <sstream>

namespace lgf {

namespace {

LogSeries wr(const LogSeries& a, const LogSeries& b) { return a * b.theta() - a.theta() * b; }

// exp(c * sum_{n>=1} g_n x^n / n), i.e. exp(c * int (g - g0)/x dx)
PowerSeries exp_int(const PowerSeries& g, const Rational& c) {
    PowerSeries s(g.order());
    for (int n = 1; n <= g.order(); ++n) s[n] = c * g[n] / n;
    return s.exp();
}

// u(x) with a(x) = x^v u(x); throws if a has lower valuation.
PowerSeries stripped(const QPoly& a, int v, int order) {
    PowerSeries s(order);
    for (int i = 0; i <= a.degree(); ++i) {
        if (sgn(a.coeff(i)) == 0) continue;
        if (i < v) throw Error(ErrorKind::FitFailure, "unexpected low-order term in operator");
        if (i - v <= order) s[i - v] = a.coeff(i);
    }
    return s;
}

bool proportional(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    if (sgn(a[0]) == 0 || sgn(b[0]) == 0) return false;
    Rational c = a[0] / b[0];
    for (int i = 1; i <= n; ++i)
        if (a[i] != c * b[i]) return false;
    return true;
}

}  // namespace

FifthOrderResult wronskian_fifth_order(const ThetaOperator& op4, int N, int kmax) {
    if (op4.order() != 4) throw Error(ErrorKind::NotMUM, "needs an order-4 operator");
    auto fb = frobenius(op4, N);
    const auto& y = fb.y;
    LogSeries w0 = wr(y[0], y[1]);
    LogSeries w1 = wr(y[0], y[2]);
    FifthOrderResult res;
    std::ostringstream os;
    res.w0_log_free = w0.is_log_free();
    auto op5 = fit_min_degree(w0.part(0), 5, kmax);
    if (!op5) throw Error(ErrorKind::FitFailure, "no order-5 annihilator of x*w01 up to degree " + std::to_string(kmax));
    res.op5 = *op5;
    res.op5.set_name("fifth-order");
    res.annihilates_w0 = apply(res.op5, w0.part(0)).is_zero();
    res.annihilates_w1 = apply(res.op5, w1).is_zero();

    // x W(w0, w1) in theta form; the log parts cancel
    LogSeries fw = wr(w0, w1);
    int M = fw.order();
    if (!fw.is_log_free()) {
        os << "W(w0,w1) has log terms; ";
        res.detail = os.str();
        return res;
    }
    PowerSeries fW = fw.part(0);

    DOperator d4 = to_dform(op4), d5 = to_dform(res.op5);
    PowerSeries u4 = stripped(d4.a[4], 4, M), u3 = stripped(d4.a[3], 3, M);
    PowerSeries v5 = stripped(d5.a[5], 5, M), v4 = stripped(d5.a[4], 4, M);
    if (sgn(u4[0]) == 0 || sgn(v5[0]) == 0) throw Error(ErrorKind::FitFailure, "singular leading coefficient at 0");
    PowerSeries g = u3 / u4, gh = v4 / v5;  // P = g/x, P5 = gh/x
    Rational rho = g[0], rho5 = gh[0];

    // P = 2/x + (2/5) P5 as rational functions
    RatFunc P(d4.a[3], d4.a[4]), P5(d5.a[4], d5.a[5]);
    res.p_relation = P == RatFunc(QPoly{2}, QPoly{0, 1}) + P5 * RatFunc(QPoly(std::vector<Rational>{Rational(2, 5)}));

    // W = fW/x and exp(-1/2 int P) = x^(-rho/2) / E, so the identity reads
    // fW * E = x^(3 - rho/2) y0^2 (up to the constant in the integral).
    Rational s = Rational(3) - rho / 2;
    PowerSeries E = exp_int(g, Rational(1, 2));
    PowerSeries lhs = fW * E, y0sq = fb.A[0].truncated(M) * fb.A[0].truncated(M);
    if (s.get_den() == 1 && sgn(s) >= 0) {
        int si = static_cast<int>(s.get_num().get_si());
        res.wronskian_identity = proportional(lhs, y0sq.shifted(si).truncated(M));
    }

    // y0 = sqrt(W exp(1/2 int P)) / x with P = 2/x + (2/5) P5:
    //    = x^(rho5/10 - 1) sqrt(fW * exp(1/5 int (gh - rho5)/x))
    Rational alpha = rho5 / 10 - 1;
    PowerSeries Eh = exp_int(gh, Rational(1, 5));
    PowerSeries R = fW * Eh;
    if (sgn(alpha) == 0 && sgn(R[0]) > 0) {
        PowerSeries root = (R * (1 / R[0])).sqrt();
        res.recovered = root;
        res.recovered_proportional = proportional(root, fb.A[0].truncated(M));
    }
    // printed form: x^(5/2) sqrt(W) exp(-1/5 int P5) = x^(2 - rho5/5) sqrt(fW) / Eh
    if (sgn(fW[0]) > 0) {
        PowerSeries printed = (fW * (1 / fW[0])).sqrt() / Eh;
        res.printed_form_proportional = Rational(2) - rho5 / 5 == 0 && proportional(printed, fb.A[0].truncated(M));
    }
    os << "order-5 operator of degree " << res.op5.degree() << "; residue of P at 0 = " << to_string(rho)
       << ", of P5 = " << to_string(rho5) << "; compared through x^" << M;
    res.detail = os.str();
    return res;
}

SymmetricSquare symmetric_square(const DOperator& op3) {
    if (op3.order() != 3) throw std::invalid_argument("symmetric_square: order must be 3");
    RatFunc a3(op3.a[3]);
    RatFunc c2 = RatFunc(op3.a[2]) / a3, c1 = RatFunc(op3.a[1]) / a3, c0 = RatFunc(op3.a[0]) / a3;
    SymmetricSquare s;
    RatFunc third(QPoly(std::vector<Rational>{Rational(1, 3)}));
    RatFunc quarter(QPoly(std::vector<Rational>{Rational(1, 4)}));
    RatFunc two(QPoly{2}), four(QPoly{4});
    s.P = c2 * third;
    s.Q = (c1 - two * s.P * s.P - s.P.derivative()) * quarter;
    s.residual = c0 - (four * s.P * s.Q + two * s.Q.derivative());
    s.ok = s.residual.is_zero();
    return s;
}

SymmetricSquare symmetric_square_check(const DOperator& op3) {
    auto s = symmetric_square(op3);
    if (!s.ok) throw Error(ErrorKind::NotSymmetricSquare, "residual " + s.residual.to_string());
    return s;
}

}  // namespace lgf
