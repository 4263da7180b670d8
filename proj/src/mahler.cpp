#include "lgf/mahler.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

using cd = std::complex<double>;

// Jensen: m(sum c_k y^k) = log|c_top| + sum log max(1, |root|).
double jensen(const std::vector<cd>& c) {
    int lo = 0, hi = static_cast<int>(c.size()) - 1;
    double scale = 0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0) return -INFINITY;
    while (hi >= 0 && std::abs(c[hi]) <= 1e-14 * scale) --hi;
    while (lo < hi && std::abs(c[lo]) <= 1e-14 * scale) ++lo;
    double m = std::log(std::abs(c[hi]));
    int deg = hi - lo;
    if (deg == 0) return m;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -c[lo + i] / c[hi];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    for (int i = 0; i < deg; ++i) m += std::log(std::max(1.0, std::abs(es.eigenvalues()[i])));
    return m;
}

struct Term {
    std::vector<int> e;
    double c;
};

double grid_value(const std::vector<Term>& terms, int nvars, int lo, int span, int M) {
    int outer = nvars - 1;
    long total = 1;
    for (int i = 0; i < outer; ++i) total *= M;
    double sum = 0;
    std::vector<cd> coef(static_cast<size_t>(span) + 1);
    std::vector<cd> pt(static_cast<size_t>(outer));
    for (long idx = 0; idx < total; ++idx) {
        long r = idx;
        for (int i = 0; i < outer; ++i) {
            double th = 2 * M_PI * (static_cast<double>(r % M) + 0.5) / M;
            pt[i] = cd(std::cos(th), std::sin(th));
            r /= M;
        }
        std::fill(coef.begin(), coef.end(), cd(0));
        for (const auto& t : terms) {
            cd v = t.c;
            for (int i = 0; i < outer; ++i) v *= std::pow(pt[i], t.e[i]);
            coef[static_cast<size_t>(t.e[outer] - lo)] += v;
        }
        sum += jensen(coef);
    }
    return sum / static_cast<double>(total);
}

}  // namespace

MahlerResult log_mahler_measure(const LaurentPoly& F, double tol, int max_grid) {
    if (F.size() == 0) throw Error(ErrorKind::DomainError, "Mahler measure of the zero polynomial");
    MahlerResult r;
    int n = F.nvars();
    std::vector<Term> terms;
    int lo = 1 << 30, hi = -(1 << 30);
    for (const auto& [e, c] : F.terms()) {
        terms.push_back({e, c.get_d()});
        if (n > 0) {
            lo = std::min(lo, e[n - 1]);
            hi = std::max(hi, e[n - 1]);
        }
    }
    if (n == 0 || F.size() == 1) {
        r.m = {BigFloat(std::log(std::abs(terms[0].c))), BigFloat(0)};
        r.M = exp(r.m.value);
        return r;
    }
    if (n == 1) {
        std::vector<cd> coef(static_cast<size_t>(hi - lo) + 1);
        for (const auto& t : terms) coef[static_cast<size_t>(t.e[0] - lo)] += t.c;
        r.m = {BigFloat(jensen(coef)), BigFloat(1e-13)};
        r.M = exp(r.m.value);
        return r;
    }
    if (n >= 3) max_grid = std::min(max_grid, 256);
    int M = n == 2 ? 256 : 16;
    double prev = grid_value(terms, n, lo, hi - lo, M);
    for (;;) {
        M *= 2;
        double cur = grid_value(terms, n, lo, hi - lo, M);
        double err = std::abs(cur - prev);
        prev = cur;
        if (err <= tol || M >= max_grid) {
            if (err > tol)
                throw Error(ErrorKind::PrecisionNotMet, "Mahler measure grid did not converge (" +
                                                            to_string(BigFloat(err), 3) + ")");
            r.m = {BigFloat(cur), BigFloat(err)};
            r.M = exp(r.m.value);
            r.grid = M;
            return r;
        }
    }
}

}  // namespace lgf
