#include "lgf/ode.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lgf {

namespace {

QPoly lin(long a, long b) { return QPoly{a, b}; }  // a + b*theta

QPoly pw(const QPoly& p, int k) {
    QPoly r{1};
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

QPoly scaled(const QPoly& p, const Rational& s) { return p * s; }

Integer lcm_den(const std::vector<QPoly>& ps) {
    Integer l = 1;
    for (const auto& p : ps)
        for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

}  // namespace

ThetaOperator::ThetaOperator(std::vector<QPoly> polys, std::string name, std::string note)
    : P_(std::move(polys)), name_(std::move(name)), note_(std::move(note)) {
    while (P_.size() > 1 && P_.back().is_zero()) P_.pop_back();
    if (P_.empty()) P_.push_back(QPoly());
}

int ThetaOperator::order() const {
    int r = 0;
    for (const auto& p : P_) r = std::max(r, p.degree());
    return r;
}

ThetaOperator ThetaOperator::normalized() const {
    std::vector<QPoly> ps = P_;
    Integer l = lcm_den(ps);
    Integer g = 0;
    for (auto& p : ps) {
        p = p * Rational(l);
        for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (sgn(g) == 0) return *this;
    Rational f(1, 1);
    f = Rational(1) / Rational(g);
    for (const auto& p : ps)
        if (!p.is_zero()) {
            if (sgn(p.lead()) < 0) f = -f;
            break;
        }
    for (auto& p : ps) p = p * f;
    return ThetaOperator(std::move(ps), name_, note_);
}

ThetaOperator ThetaOperator::rescaled(const Rational& s) const {
    std::vector<QPoly> ps = P_;
    Rational f = 1;
    for (auto& p : ps) {
        p = p * f;
        f *= s;
    }
    return ThetaOperator(std::move(ps), name_, note_);
}

std::string ThetaOperator::to_text() const {
    std::ostringstream os;
    int r = order();
    for (int l = 0; l <= degree(); ++l) {
        os << l << " :";
        for (int j = 0; j <= r; ++j) os << ' ' << lgf::to_string(P_[l].coeff(j));
        os << '\n';
    }
    return os.str();
}

std::string ThetaOperator::to_string() const {
    std::ostringstream os;
    for (int l = 0; l <= degree(); ++l) {
        if (P_[l].is_zero()) continue;
        if (l > 0) os << " + ";
        if (l == 1) os << "x*";
        else if (l > 1) os << "x^" << l << "*";
        os << "(" << P_[l].to_string("t") << ")";
    }
    return os.str();
}

ThetaOperator parse_operator(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<int, QPoly> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        auto bad = [&](const std::string& why) {
            return Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + why);
        };
        if (colon == std::string::npos) throw bad("expected 'l : c_0 ... c_r'");
        int l;
        try {
            size_t used = 0;
            l = std::stoi(line.substr(0, colon), &used);
        } catch (const std::exception&) {
            throw bad("bad power index");
        }
        if (l < 0 || l > 1000 || rows.count(l)) throw bad("bad or repeated power index");
        std::istringstream cs(line.substr(colon + 1));
        std::string tok;
        std::vector<Rational> c;
        while (cs >> tok) {
            Rational q;
            if (q.set_str(tok, 10) != 0 || sgn(q.get_den()) == 0) throw bad("bad coefficient '" + tok + "'");
            q.canonicalize();
            c.push_back(q);
        }
        rows[l] = QPoly(std::move(c));
    }
    if (rows.empty()) throw Error(ErrorKind::ParseError, "empty operator");
    std::vector<QPoly> ps(static_cast<size_t>(rows.rbegin()->first) + 1);
    for (auto& [l, p] : rows) ps[l] = p;
    return ThetaOperator(std::move(ps));
}

// ---- registry ------------------------------------------------------------

std::vector<std::string> registry_names() {
    return {"bcc4", "sc4", "diamond4", "fcc4", "sc3", "sc3x", "iwan3", "iwan4", "iwan5", "iwan6"};
}

ThetaOperator registry(const std::string& name) {
    const QPoly t = lin(0, 1), t1 = lin(1, 1), t2 = lin(2, 1), t3 = lin(3, 1), s1 = lin(1, 2),
                s3 = lin(3, 2);
    if (name == "bcc4") {
        return ThetaOperator({pw(t, 4), scaled(pw(s1, 4), -16)}, name,
                             "y0 = sum binom(2n,n)^4 x^n, x = (z/16)^2");
    }
    if (name.rfind("iwan", 0) == 0 && name.size() > 4) {
        int d = 0;
        try {
            d = std::stoi(name.substr(4));
        } catch (const std::exception&) {
            d = 0;
        }
        if (d < 1 || d > 64) throw Error(ErrorKind::UnknownOperator, name);
        Rational c;
        mpz_ui_pow_ui(c.get_num_mpz_t(), 2, static_cast<unsigned long>(d));
        return ThetaOperator({pw(t, d), scaled(pw(s1, d), -c)}, name,
                             "y0 = sum binom(2n,n)^" + std::to_string(d) + " x^n, x = (z/2^d)^2");
    }
    if (name == "sc4") {
        return ThetaOperator({pw(t, 4), scaled(pw(s1, 2) * QPoly{2, 5, 5}, -4),
                              scaled(pw(t1, 2) * s1 * s3, 256)},
                             name, "y0 = sum a_2n(sc,4) x^n, x = (z/8)^2");
    }
    if (name == "diamond4") {
        return ThetaOperator({pw(t, 4), -QPoly{5, 28, 63, 70, 35}, pw(t1, 2) * QPoly{285, 518, 259},
                              scaled(pw(t1, 2) * pw(t2, 2), -225)},
                             name, "y0 = sum S_n^(5) x^n, x = (z/5)^2");
    }
    if (name == "fcc4") {
        std::vector<QPoly> ps{
            pw(t, 4),
            QPoly{0, -4, -19, -30, 39},
            scaled(QPoly{-192, -676, -1057, -1070, 16}, 2),
            scaled(QPoly{316, 600, 566, 171} * lin(2, 3), -36),
            scaled(QPoly{702, 2173, 2635, 1542, 384}, -32 * 27),
            scaled(QPoly{4584, 8378, 5571, 1393} * t1, -64 * 27),
            scaled(QPoly{98, 105, 31} * t1 * t2, -1024 * 243),
            scaled(t1 * pw(t2, 2) * t3, -4096 * 2187),
        };
        return ThetaOperator(std::move(ps), name, "y0 = sum a_n(fcc,4) x^n, x = z/24");
    }
    if (name == "sc3") {
        return ThetaOperator({pw(t, 3), scaled(s1 * QPoly{3, 10, 10}, -2), scaled(t1 * s1 * s3, 36)}, name,
                             "y0 = sum a_2n(sc,3) u^n, u = z^2/36");
    }
    if (name == "sc3x") {
        return ThetaOperator({scaled(pw(t, 3), 36), -QPoly{6, 32, 60, 40}, t1 * s1 * s3}, name,
                             "y0 = P(0;z) as a series in x = z^2");
    }
    throw Error(ErrorKind::UnknownOperator, "no operator named '" + name + "'");
}

DOperator sc3_dform() {
    // 4x^2(x-1)(x-9) f''' + 12x(2x^2-15x+9) f'' + 3(9x^2-44x+12) f' + 3(x-2) f
    return {{QPoly{-6, 3}, QPoly{36, -132, 27}, QPoly{0, 108, -180, 24}, QPoly{0, 0, 36, -40, 4}}};
}

namespace {

// S(j, i), Stirling numbers of the second kind
std::vector<std::vector<Integer>> stirling2(int n) {
    std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1));
    s[0][0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) s[j][i] = s[j - 1][i - 1] + i * s[j - 1][i];
    return s;
}

}  // namespace

DOperator to_dform(const ThetaOperator& op) {
    int r = op.order();
    auto S = stirling2(r);
    std::vector<std::vector<Rational>> a(r + 1, std::vector<Rational>(op.degree() + r + 1));
    for (int l = 0; l <= op.degree(); ++l)
        for (int j = 0; j <= r; ++j) {
            Rational p = op.coeff(l, j);
            if (sgn(p) == 0) continue;
            for (int i = 0; i <= j; ++i) a[i][l + i] += p * S[j][i];
        }
    DOperator d;
    for (auto& v : a) d.a.emplace_back(std::move(v));
    return d;
}

ThetaOperator to_theta(const DOperator& op) {
    int m = 0;
    for (int i = 0; i <= op.order(); ++i)
        if (!op.a[i].is_zero()) m = std::max(m, i - op.a[i].valuation());
    std::vector<QPoly> ps;
    QPoly ff{1};  // theta (theta-1) ... (theta-i+1)
    for (int i = 0; i <= op.order(); ++i) {
        const QPoly& ai = op.a[i];
        for (int c = 0; c <= ai.degree(); ++c) {
            if (sgn(ai.coeff(c)) == 0) continue;
            int l = c + m - i;
            if (static_cast<int>(ps.size()) <= l) ps.resize(static_cast<size_t>(l) + 1);
            ps[l] = ps[l] + ff * ai.coeff(c);
        }
        ff = ff * QPoly{-i, 1};
    }
    // drop leading zero powers of x
    size_t lead = 0;
    while (lead + 1 < ps.size() && ps[lead].is_zero()) ++lead;
    ps.erase(ps.begin(), ps.begin() + static_cast<long>(lead));
    return ThetaOperator(std::move(ps));
}

// ---- application ---------------------------------------------------------

PowerSeries apply(const ThetaOperator& op, const PowerSeries& f) {
    int N = f.order();
    PowerSeries out(N);
    for (int n = 0; n <= N; ++n) {
        Rational s;
        for (int l = 0; l <= op.degree() && l <= n; ++l)
            if (sgn(f[n - l]) != 0) s += op.P(l).eval(n - l) * f[n - l];
        out[n] = s;
    }
    return out;
}

LogSeries apply(const ThetaOperator& op, const LogSeries& f) {
    int r = op.order();
    std::vector<LogSeries> T{f};
    for (int j = 1; j <= r; ++j) T.push_back(T.back().theta());
    LogSeries out(PowerSeries(f.order()));
    for (int l = 0; l <= op.degree(); ++l) {
        LogSeries acc(PowerSeries(f.order()));
        for (int j = 0; j <= r; ++j) {
            Rational p = op.coeff(l, j);
            if (sgn(p) != 0) acc = acc + T[j] * p;
        }
        out = out + acc.shifted(l).truncated(f.order());
    }
    return out;
}

Report annihilates(const ThetaOperator& op, const PowerSeries& f) {
    PowerSeries r = apply(op, f);
    for (int n = 0; n <= r.order(); ++n)
        if (sgn(r[n]) != 0)
            return Report::fail(n, "residual " + lgf::to_string(r[n]) + " at x^" + std::to_string(n));
    return Report::pass("through x^" + std::to_string(r.order()));
}

// ---- indicial ------------------------------------------------------------

bool is_mum(const ThetaOperator& op) {
    const QPoly& p0 = op.P(0);
    int r = op.order();
    if (p0.degree() != r || r == 0) return false;
    for (int j = 0; j < r; ++j)
        if (sgn(p0.coeff(j)) != 0) return false;
    return true;
}

IndicialReport indicial(const ThetaOperator& op) {
    IndicialReport rep;
    auto r0 = rational_roots(op.P(0));
    rep.at_zero = r0.rational;
    rep.irrational_at_zero = r0.irrational;
    rep.mum = is_mum(op);
    const QPoly& pk = op.P(op.degree());
    std::vector<Rational> c;
    for (int j = 0; j <= pk.degree(); ++j) c.push_back((j % 2) ? Rational(-pk.coeff(j)) : pk.coeff(j));
    auto ri = rational_roots(QPoly(std::move(c)));
    rep.at_infinity = ri.rational;
    rep.irrational_at_infinity = ri.irrational;
    const auto& L = rep.at_infinity;
    rep.condition_three = op.order() == 4 && L.size() == 4 && ri.irrational == 0 && sgn(L[0]) > 0 &&
                          L[0] + L[3] == L[1] + L[2];
    return rep;
}

// ---- Appendix B families, Moebius ---------------------------------------

ThetaOperator triple_operator(int order, const Rational& a, const Rational& b, const Rational& c) {
    QPoly t{0, 1}, t1{1, 1};
    QPoly inner = QPoly(std::vector<Rational>{b, a, a});  // a theta^2 + a theta + b
    if (order == 2)
        return ThetaOperator({t * t, -inner, t1 * t1 * c}, "triple2");
    if (order == 3)
        return ThetaOperator({t * t * t, -(QPoly{1, 2} * inner), t1 * t1 * t1 * c}, "triple3");
    throw std::invalid_argument("triple_operator order must be 2 or 3");
}

PowerSeries moebius_pullback(const PowerSeries& f, const Rational& a) {
    int N = f.order();
    PowerSeries one_minus(N);
    one_minus[0] = 1;
    if (N >= 1) one_minus[1] = -a;
    PowerSeries inner = PowerSeries::variable(N) / one_minus;
    return f.compose(inner) / one_minus;
}

bool is_integral(const PowerSeries& f, int upto) {
    for (int n = 0; n <= std::min(upto, f.order()); ++n)
        if (f[n].get_den() != 1) return false;
    return true;
}

}  // namespace lgf
