#include "lgf/series.hpp"

#include <algorithm>

namespace lgf {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::BadInnerConstant: return "BadInnerConstant";
    case ErrorKind::UnsupportedLattice: return "UnsupportedLattice";
    case ErrorKind::UnsupportedTerm: return "UnsupportedTerm";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::UnknownOperator: return "UnknownOperator";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::NotMUM: return "NotMUM";
    case ErrorKind::FitFailure: return "FitFailure";
    case ErrorKind::NotSymmetricSquare: return "NotSymmetricSquare";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DivergentRequest: return "DivergentRequest";
    case ErrorKind::DivergenceError: return "DivergenceError";
    case ErrorKind::PrecisionNotMet: return "PrecisionNotMet";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

Integer binomial(long n, long k) {
    Integer r;
    if (n < 0 || k < 0 || k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- PowerSeries ---------------------------------------------------------

PowerSeries::PowerSeries(int order) : c_(static_cast<size_t>(std::max(order, 0)) + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
}

PowerSeries::PowerSeries(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    if (c_.empty()) c_.resize(1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries r(order);
    r.c_[0] = c;
    return r;
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries r(order);
    if (order >= 1) r.c_[1] = 1;
    return r;
}

PowerSeries PowerSeries::geometric(int order) {
    PowerSeries r(order);
    for (auto& x : r.c_) x = 1;
    return r;
}

Rational PowerSeries::coeff(int n) const {
    if (n < 0) return 0;
    if (n > order()) throw std::out_of_range("coefficient beyond truncation order");
    return c_[n];
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend truncation order");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

int PowerSeries::valuation() const {
    for (int i = 0; i <= order(); ++i)
        if (sgn(c_[i]) != 0) return i;
    return order() + 1;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& b) {
    c_.resize(std::min(c_.size(), b.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& b) {
    c_.resize(std::min(c_.size(), b.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    int va = a.valuation(), vb = b.valuation();
    PowerSeries r(n);
    Rational t;
    for (int i = va; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = vb; i + j <= n; ++j) {
            if (sgn(b[j]) == 0) continue;
            t = a[i] * b[j];
            r[i + j] += t;
        }
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (sgn(c_[0]) == 0) throw Error(ErrorKind::ZeroConstantTerm, "series inverse");
    int n = order();
    PowerSeries r(n);
    Rational inv0 = 1 / c_[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int i = 1; i <= k; ++i)
            if (sgn(c_[i]) != 0) s += c_[i] * r[k - i];
        r[k] = -s * inv0;
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (sgn(b[0]) == 0) throw Error(ErrorKind::ZeroConstantTerm, "series division");
    int n = std::min(a.order(), b.order());
    PowerSeries q(n);
    Rational inv0 = 1 / b[0];
    for (int k = 0; k <= n; ++k) {
        Rational s = a[k];
        for (int i = 1; i <= k; ++i)
            if (sgn(b[i]) != 0) s -= b[i] * q[k - i];
        q[k] = s * inv0;
    }
    return q;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

PowerSeries PowerSeries::shifted(int k) const {
    if (k < 0) {
        for (int i = 0; i < -k; ++i)
            if (sgn(c_[i]) != 0) throw std::domain_error("negative shift drops nonzero terms");
        return PowerSeries(std::vector<Rational>(c_.begin() - k, c_.end()));
    }
    std::vector<Rational> v(static_cast<size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::theta() const {
    PowerSeries r(*this);
    for (int i = 0; i <= order(); ++i) r[i] *= i;
    return r;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r[i - 1] = c_[i] * i;
    return r;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries r(order() + 1);
    for (int i = 0; i <= order(); ++i) r[i + 1] = c_[i] / Rational(i + 1);
    return r;
}

PowerSeries PowerSeries::exp() const {
    if (sgn(c_[0]) != 0) throw Error(ErrorKind::BadConstantTerm, "exp needs a(0) = 0");
    int n = order();
    PowerSeries e(n);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int i = 1; i <= k; ++i)
            if (sgn(c_[i]) != 0) s += i * c_[i] * e[k - i];
        e[k] = s / Rational(k);
    }
    return e;
}

PowerSeries PowerSeries::log() const {
    if (c_[0] != 1) throw Error(ErrorKind::BadConstantTerm, "log needs a(0) = 1");
    if (order() == 0) return PowerSeries(0);
    return (derivative() / truncated(order() - 1)).integral();
}

PowerSeries PowerSeries::sqrt() const {
    const Rational& a0 = c_[0];
    if (sgn(a0) <= 0 || !mpz_perfect_square_p(a0.get_num_mpz_t()) ||
        !mpz_perfect_square_p(a0.get_den_mpz_t()))
        throw Error(ErrorKind::BadConstantTerm, "sqrt needs a positive rational square constant term");
    Integer n0, d0;
    mpz_sqrt(n0.get_mpz_t(), a0.get_num_mpz_t());
    mpz_sqrt(d0.get_mpz_t(), a0.get_den_mpz_t());
    Rational r0(n0, d0);
    r0.canonicalize();
    int n = order();
    PowerSeries s(n);
    s[0] = r0;
    Rational half_inv = 1 / (2 * r0);
    for (int k = 1; k <= n; ++k) {
        Rational t = c_[k];
        for (int i = 1; i < k; ++i) t -= s[i] * s[k - i];
        s[k] = t * half_inv;
    }
    return s;
}

// Lagrange inversion: b_n = [z^(n-1)] h^n / n with h = z / a(z).
PowerSeries PowerSeries::reversion() const {
    int n = order();
    if (n < 1 || sgn(c_[0]) != 0 || sgn(c_[1]) == 0)
        throw Error(ErrorKind::NotReversible, "reversion needs a(0) = 0 and a'(0) != 0");
    PowerSeries h = shifted(-1).truncated(n - 1).inverse();
    PowerSeries b(n);
    PowerSeries p = PowerSeries::constant(1, n - 1);
    for (int k = 1; k <= n; ++k) {
        p = p * h;
        b[k] = p[k - 1] / Rational(k);
    }
    return b;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (sgn(inner[0]) != 0) throw Error(ErrorKind::BadInnerConstant, "compose needs b(0) = 0");
    int n = std::min(order(), inner.order());
    PowerSeries b = inner.truncated(n);
    PowerSeries r = PowerSeries::constant(c_[n], n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * b;
        r[0] += c_[k];
    }
    return r;
}

// ---- LogSeries -----------------------------------------------------------

LogSeries::LogSeries(std::vector<PowerSeries> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) parts_.emplace_back(0);
    int n = order();
    for (auto& p : parts_)
        if (p.order() != n) p = p.truncated(n);
    canonicalize();
}

int LogSeries::order() const {
    int n = parts_[0].order();
    for (const auto& p : parts_) n = std::min(n, p.order());
    return n;
}

PowerSeries LogSeries::part_or_zero(int j) const {
    if (j >= 0 && j < static_cast<int>(parts_.size())) return parts_[j];
    return PowerSeries(order());
}

void LogSeries::canonicalize() {
    while (parts_.size() > 1 && parts_.back().is_zero()) parts_.pop_back();
}

bool LogSeries::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const PowerSeries& p) { return p.is_zero(); });
}

LogSeries LogSeries::theta() const {
    std::vector<PowerSeries> out;
    for (size_t j = 0; j < parts_.size(); ++j) {
        PowerSeries t = parts_[j].theta();
        if (j + 1 < parts_.size()) t += parts_[j + 1];
        out.push_back(std::move(t));
    }
    return LogSeries(std::move(out));
}

LogSeries LogSeries::shifted(int k) const {
    std::vector<PowerSeries> out;
    for (const auto& p : parts_) out.push_back(p.shifted(k));
    return LogSeries(std::move(out));
}

LogSeries LogSeries::truncated(int order) const {
    std::vector<PowerSeries> out;
    for (const auto& p : parts_) out.push_back(p.truncated(order));
    return LogSeries(std::move(out));
}

LogSeries LogSeries::operator-() const {
    std::vector<PowerSeries> out;
    for (const auto& p : parts_) out.push_back(-p);
    return LogSeries(std::move(out));
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    int n = std::min(a.order(), b.order());
    size_t m = std::max(a.parts_.size(), b.parts_.size());
    std::vector<PowerSeries> out;
    for (size_t j = 0; j < m; ++j)
        out.push_back(a.part_or_zero(static_cast<int>(j)).truncated(n) +
                      b.part_or_zero(static_cast<int>(j)).truncated(n));
    return LogSeries(std::move(out));
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    int n = std::min(a.order(), b.order());
    size_t m = a.parts_.size() + b.parts_.size() - 1;
    std::vector<PowerSeries> out(m, PowerSeries(n));
    for (size_t i = 0; i < a.parts_.size(); ++i)
        for (size_t j = 0; j < b.parts_.size(); ++j) {
            if (a.parts_[i].is_zero() || b.parts_[j].is_zero()) continue;
            Rational c(binomial(static_cast<long>(i + j), static_cast<long>(i)));
            out[i + j] += (a.parts_[i] * b.parts_[j]) * c;
        }
    return LogSeries(std::move(out));
}

LogSeries operator*(const LogSeries& a, const Rational& s) {
    std::vector<PowerSeries> out;
    for (const auto& p : a.parts_) out.push_back(p * s);
    return LogSeries(std::move(out));
}

}  // namespace lgf
