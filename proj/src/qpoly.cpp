#include "lgf/qpoly.hpp"

#include <unsupported/Eigen/Polynomials>

#include <cmath>
#include <sstream>

namespace lgf {

QPoly::QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

QPoly::QPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

QPoly QPoly::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(static_cast<size_t>(deg) + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[i];
}

Rational QPoly::eval(const Rational& x) const {
    Rational r;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

QPoly QPoly::derivative() const {
    std::vector<Rational> v;
    for (int i = 1; i <= degree(); ++i) v.push_back(c_[i] * i);
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lead());
}

QPoly QPoly::shifted(const Rational& a) const {
    // Horner in the shifted variable
    QPoly r;
    QPoly lin(std::vector<Rational>{a, Rational(1)});
    for (int i = degree(); i >= 0; --i) r = r * lin + QPoly(std::vector<Rational>{c_[i]});
    return r;
}

int QPoly::valuation() const {
    for (int i = 0; i <= degree(); ++i)
        if (sgn(c_[i]) != 0) return i;
    return 0;
}

QPoly QPoly::operator-() const { return *this * Rational(-1); }

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const Rational& s) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        Rational a = abs(c_[i]);
        os << (sgn(c_[i]) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    std::vector<Rational> quo(std::max(a.degree() - db + 1, 0));
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(rem[i]) == 0) continue;
        Rational f = rem[i] / b.lead();
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    q = QPoly(std::move(quo));
    rem.resize(static_cast<size_t>(std::max(db, 0)));
    r = QPoly(std::move(rem));
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace {

// Continued-fraction convergents of x with bounded denominators.
std::vector<Rational> convergents(double x) {
    std::vector<Rational> out;
    Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    double r = x;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(r);
        if (std::fabs(a) > 1e15) break;
        Integer ai(static_cast<long>(a));
        Integer h = ai * h0 + h1, k = ai * k0 + k1;
        h1 = h0; h0 = h; k1 = k0; k0 = k;
        Rational c(h, k);
        c.canonicalize();
        out.push_back(c);
        if (k0 > 100000000) break;
        double frac = r - a;
        if (std::fabs(frac) < 1e-14) break;
        r = 1.0 / frac;
    }
    return out;
}

}  // namespace

RootSet rational_roots(const QPoly& p) {
    RootSet rs;
    if (p.degree() <= 0) return rs;
    QPoly work = p;
    int v = work.valuation();
    for (int i = 0; i < v; ++i) rs.rational.emplace_back(0);
    if (v > 0) work = QPoly(std::vector<Rational>(work.coeffs().begin() + v, work.coeffs().end()));
    bool found = true;
    while (work.degree() > 0 && found) {
        found = false;
        QPoly sqf;
        {
            QPoly g = gcd(work, work.derivative());
            QPoly q, r;
            divmod(work, g, q, r);
            sqf = q.monic();
        }
        if (sqf.degree() == 1) {
            Rational root = -sqf.coeff(0) / sqf.coeff(1);
            while (work.degree() > 0 && sgn(work.eval(root)) == 0) {
                QPoly q, r;
                divmod(work, QPoly(std::vector<Rational>{-root, Rational(1)}), q, r);
                work = q;
                rs.rational.push_back(root);
            }
            found = true;
            continue;
        }
        int n = sqf.degree();
        Eigen::VectorXd c(n + 1);
        double scale = 0;
        for (int i = 0; i <= n; ++i) scale = std::max(scale, std::fabs(sqf.coeff(i).get_d()));
        for (int i = 0; i <= n; ++i) c[i] = sqf.coeff(i).get_d() / scale;
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
        solver.compute(c);
        for (const auto& z : solver.roots()) {
            if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
            for (const Rational& cand : convergents(z.real())) {
                if (sgn(sqf.eval(cand)) != 0) continue;
                while (work.degree() > 0 && sgn(work.eval(cand)) == 0) {
                    QPoly q, r;
                    divmod(work, QPoly(std::vector<Rational>{-cand, Rational(1)}), q, r);
                    work = q;
                    rs.rational.push_back(cand);
                }
                found = true;
                break;
            }
            if (found) break;
        }
    }
    rs.irrational = std::max(work.degree(), 0);
    std::sort(rs.rational.begin(), rs.rational.end());
    return rs;
}

// ---- RatFunc -------------------------------------------------------------

RatFunc::RatFunc(QPoly num, QPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QPoly();
        den_ = QPoly{1};
        return;
    }
    QPoly g = gcd(num, den);
    QPoly q1, r1, q2, r2;
    divmod(num, g, q1, r1);
    divmod(den, g, q2, r2);
    Rational l = q2.lead();
    num_ = q1 * (1 / l);
    den_ = q2 * (1 / l);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace lgf
