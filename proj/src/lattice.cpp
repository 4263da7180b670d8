#include "lgf/lattice.hpp"

#include <map>

namespace lgf {

const char* family_name(Family f) {
    switch (f) {
    case Family::honeycomb: return "honeycomb";
    case Family::square: return "square";
    case Family::triangular: return "triangular";
    case Family::diamond: return "diamond";
    case Family::sc: return "sc";
    case Family::bcc: return "bcc";
    case Family::fcc: return "fcc";
    case Family::sincos4: return "sincos4";
    case Family::triples4: return "triples4";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    static const std::map<std::string, Family> names = {
        {"honeycomb", Family::honeycomb}, {"square", Family::square},
        {"triangular", Family::triangular}, {"diamond", Family::diamond},
        {"sc", Family::sc}, {"bcc", Family::bcc}, {"fcc", Family::fcc},
        {"sincos4", Family::sincos4}, {"triples4", Family::triples4}};
    auto it = names.find(s);
    if (it == names.end()) throw Error(ErrorKind::UnsupportedLattice, "unknown family '" + s + "'");
    return it->second;
}

LatticeSpec make_spec(Family f, int dim) {
    auto bad = [&]() {
        return Error(ErrorKind::UnsupportedLattice,
                     std::string(family_name(f)) + " in dimension " + std::to_string(dim));
    };
    switch (f) {
    case Family::honeycomb:
        if (dim != 2) throw bad();
        return {f, 2, 3, Parity::two_site};
    case Family::square:
        if (dim != 2) throw bad();
        return {f, 2, 4, Parity::even_only};
    case Family::triangular:
        if (dim != 2) throw bad();
        return {f, 2, 6, Parity::all_n};
    case Family::diamond:
        if (dim < 2 || dim > 16) throw bad();
        return {f, dim, dim + 1, Parity::two_site};
    case Family::sc:
        if (dim < 1 || dim > 16) throw bad();
        return {f, dim, 2 * dim, Parity::even_only};
    case Family::bcc:
        if (dim < 1 || dim > 16) throw bad();
        return {f, dim, 1 << dim, Parity::even_only};
    case Family::fcc:
        if (dim < 2 || dim > 8) throw bad();
        return {f, dim, 2 * dim * (dim - 1), Parity::all_n};
    case Family::sincos4:
        if (dim != 4) throw bad();
        return {f, 4, 8, Parity::even_only};
    case Family::triples4:
        if (dim != 4) throw bad();
        return {f, 4, 32, Parity::even_only};
    }
    throw bad();
}

std::string spec_name(const LatticeSpec& s) {
    return std::string(family_name(s.family)) + "-" + std::to_string(s.dim);
}

int index_stride(const LatticeSpec& s) { return s.parity == Parity::all_n ? 1 : 2; }

// ---- multinomial sums ----------------------------------------------------

std::vector<Integer> multinomial_sq_table(int N, int d) {
    std::vector<Integer> prev(static_cast<size_t>(N) + 1, Integer(1));
    if (d <= 1) return prev;
    std::vector<std::vector<Integer>> bsq(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        bsq[n].resize(static_cast<size_t>(n) + 1);
        for (int m = 0; m <= n; ++m) {
            Integer b = binomial(n, m);
            bsq[n][m] = b * b;
        }
    }
    for (int k = 2; k <= d; ++k) {
        std::vector<Integer> cur(static_cast<size_t>(N) + 1);
        for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= n; ++m) cur[n] += bsq[n][m] * prev[m];
        prev = std::move(cur);
    }
    return prev;
}

Integer multinomial_sq_sum(long n, int d) {
    return multinomial_sq_table(static_cast<int>(n), d)[n];
}

Integer diamond3_binomial_sum(long n) {
    Integer s;
    for (long j = 0; j <= n; ++j) {
        Integer b = binomial(n, j);
        s += b * b * binomial(2 * j, j) * binomial(2 * n - 2 * j, n - j);
    }
    return s;
}

Integer multinomial5_double_sum(long n) {
    Integer s, nf = factorial(n);
    for (long k1 = 0; k1 <= n; ++k1)
        for (long k2 = 0; k1 + k2 <= n; ++k2) {
            Integer m = nf / (factorial(k1) * factorial(k2) * factorial(n - k1 - k2));
            s += m * m * binomial(2 * k1, k1) * binomial(2 * k2, k2);
        }
    return s;
}

Rational terminating_hypergeometric(const std::vector<Rational>& upper,
                                    const std::vector<Rational>& lower, const Rational& x) {
    Rational sum = 0, term = 1;
    for (long k = 0; k < 100000; ++k) {
        sum += term;
        Rational ratio = x / Rational(k + 1);
        bool stop = false;
        for (const auto& a : upper) {
            Rational f = a + k;
            if (sgn(f) == 0) stop = true;
            ratio *= f;
        }
        if (stop) break;
        for (const auto& b : lower) {
            Rational f = b + k;
            if (sgn(f) == 0) throw Error(ErrorKind::DomainError, "lower parameter hits a pole");
            ratio /= f;
        }
        term *= ratio;
    }
    return sum;
}

// Sum as printed (after the AZES09 simplification).
Integer fcc4_printed_fivefold(long n) {
    Integer s;
    for (long i = 0; i <= n; ++i)
        for (long k = 0; i + k <= n; ++k)
            for (long l = 0; i + k + l <= n; ++l)
                for (long m = 0; i + k + l + m <= n; ++m) {
                    long j = n - i - k - l - m;
                    Integer b = binomial(2 * (l + m), l + m);
                    Integer t = binomial(2 * i, i) * binomial(2 * j, j) * binomial(2 * k, k) *
                                binomial(l + m, m) * b * b * binomial(n, 2 * (l + m));
                    if (sgn(t) == 0) continue;
                    t *= binomial(n - 2 * l - 2 * m, n - 2 * i - l - m) *
                         binomial(2 * i - l - m, i - k - l);
                    s += t;
                }
    return s;
}

namespace {

// binom(k, k/2) for even k, else 0: 2^k <cos^k>.
Integer central_or_zero(long k) {
    if (k < 0 || (k & 1)) return Integer(0);
    return binomial(k, k / 2);
}

}  // namespace

// lambda = p + r + s t with p = c1c2, r = c3c4, s = c1+c2, t = c3+c4;
// a_n = 4^n <lambda^n>.
Integer fcc4_fivefold(long n) {
    Integer s;
    Integer nf = factorial(n);
    for (long A = 0; A <= n; ++A)
        for (long B = 0; A + B <= n; ++B) {
            long C = n - A - B;
            Integer s1, s2;
            for (long u = 0; u <= C; ++u)
                s1 += binomial(C, u) * central_or_zero(A + u) * central_or_zero(A + C - u);
            if (sgn(s1) == 0) continue;
            for (long v = 0; v <= C; ++v)
                s2 += binomial(C, v) * central_or_zero(B + v) * central_or_zero(B + C - v);
            s += nf / (factorial(A) * factorial(B) * factorial(C)) * s1 * s2;
        }
    return s;
}

// a_n = 64^n <e3(c)^(2n)>: with m = 2n, sum over a+b+c+d = m of the
// multinomial times prod binom(m-a_i, (m-a_i)/2), done as two binomial
// self-convolutions of f_a = binom(m-a, (m-a)/2).
Integer triples4_term(long n) {
    long m = 2 * n;
    std::vector<Integer> f(static_cast<size_t>(m) + 1), g(static_cast<size_t>(m) + 1);
    for (long a = 0; a <= m; ++a) f[a] = central_or_zero(m - a);
    std::vector<Integer> row(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) {
        Integer acc;
        for (long i = 0; i <= k; ++i)
            if (sgn(f[i]) != 0 && sgn(f[k - i]) != 0) acc += binomial(k, i) * f[i] * f[k - i];
        g[k] = acc;
    }
    Integer r;
    for (long i = 0; i <= m; ++i) r += binomial(m, i) * g[i] * g[m - i];
    return r;
}

// ---- tables --------------------------------------------------------------

CoeffTable coeffs(const LatticeSpec& spec, int N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    CoeffTable t{spec, {}};
    auto& v = t.values;
    v.resize(static_cast<size_t>(N) + 1);
    int d = spec.dim;
    switch (spec.family) {
    case Family::honeycomb: v = multinomial_sq_table(N, 3); break;
    case Family::diamond: v = multinomial_sq_table(N, d + 1); break;
    case Family::square:
        for (int n = 0; n <= N; ++n) {
            Integer b = binomial(2 * n, n);
            v[n] = b * b;
        }
        break;
    case Family::sc:
    case Family::sincos4: {
        auto S = multinomial_sq_table(N, d);
        for (int n = 0; n <= N; ++n) v[n] = binomial(2 * n, n) * S[n];
        break;
    }
    case Family::bcc:
        for (int n = 0; n <= N; ++n) {
            Integer b = binomial(2 * n, n);
            mpz_pow_ui(v[n].get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d));
        }
        break;
    case Family::triangular: {
        auto b = multinomial_sq_table(N, 3);
        for (int n = 0; n <= N; ++n) {
            Integer s, p3 = 1;  // (-3)^(n-j) from j = n downwards
            for (int j = n; j >= 0; --j) {
                s += binomial(n, j) * p3 * b[j];
                p3 *= -3;
            }
            v[n] = s;
        }
        break;
    }
    case Family::fcc:
        if (d == 2) {
            for (int n = 0; n <= N; ++n) {
                if (n % 2) continue;
                Integer b = binomial(n, n / 2);
                v[n] = b * b;
            }
        } else if (d == 3) {
            auto b = multinomial_sq_table(N, 4);
            for (int n = 0; n <= N; ++n) {
                Integer s, p4 = 1;
                for (int j = n; j >= 0; --j) {
                    s += binomial(n, j) * p4 * b[j];
                    p4 *= -4;
                }
                v[n] = s;
            }
        } else if (d == 4) {
            for (int n = 0; n <= N; ++n) v[n] = fcc4_fivefold(n);
        } else {
            throw Error(ErrorKind::UnsupportedLattice,
                        "no closed-form fcc coefficients for d = " + std::to_string(d) +
                            "; use the constant-term method");
        }
        break;
    case Family::triples4:
        for (int n = 0; n <= N; ++n) v[n] = triples4_term(n);
        break;
    }
    for (const auto& x : v)
        if (sgn(x) < 0) throw std::logic_error("negative return count in " + spec_name(spec));
    return t;
}

// ---- relations -----------------------------------------------------------

Report relation_triangular_from_honeycomb(int N) {
    auto lhs = coeffs(make_spec(Family::triangular, 2), N).values;
    auto b = coeffs(make_spec(Family::honeycomb, 2), N).values;
    for (int n = 0; n <= N; ++n) {
        Integer s;
        for (int j = 0; j <= n; ++j) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n - j));
            if ((n - j) & 1) p = -p;
            s += binomial(n, j) * p * b[j];
        }
        if (s != lhs[n])
            return Report::fail(n, "triangular a_" + std::to_string(n) + " = " + lhs[n].get_str() +
                                       " but relation gives " + s.get_str());
    }
    return Report::pass("n <= " + std::to_string(N));
}

Report relation_fcc_from_diamond(int N) {
    auto lhs = coeffs(make_spec(Family::fcc, 3), N).values;
    std::vector<Integer> b(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) b[n] = diamond3_binomial_sum(n);
    for (int n = 0; n <= N; ++n) {
        Integer s;
        for (int j = 0; j <= n; ++j) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(n - j));
            if ((n - j) & 1) p = -p;
            s += binomial(n, j) * p * b[j];
        }
        if (s != lhs[n])
            return Report::fail(n, "fcc a_" + std::to_string(n) + " = " + lhs[n].get_str() +
                                       " but relation gives " + s.get_str());
    }
    return Report::pass("n <= " + std::to_string(N));
}

Report relation_hypercubic_from_hyperdiamond(int d, int N) {
    auto lhs = coeffs(make_spec(d == 2 ? Family::square : Family::sc, d), N).values;
    auto rhs = d == 2 ? coeffs(make_spec(Family::honeycomb, 2), N).values
                      : coeffs(make_spec(Family::diamond, d - 1), N).values;
    if (d == 2) rhs = multinomial_sq_table(N, 2);  // the 1d "diamond" is a chain: S^(2)
    for (int n = 0; n <= N; ++n) {
        Integer r = binomial(2 * n, n) * rhs[n];
        if (r != lhs[n])
            return Report::fail(n, "a_2n(sc) = " + lhs[n].get_str() + " vs " + r.get_str());
    }
    return Report::pass("d = " + std::to_string(d) + ", n <= " + std::to_string(N));
}

// ---- trigonometric structure functions -----------------------------------

namespace {

TrigTerm term(int nv, std::initializer_list<int> cos_idx, std::initializer_list<int> sin_idx,
              Rational c = 1) {
    TrigTerm t{c, std::vector<int>(nv), std::vector<int>(nv)};
    for (int i : cos_idx) t.cos_exp[i]++;
    for (int i : sin_idx) t.sin_exp[i]++;
    return t;
}

// <cos^a sin^b> over a full period.
Rational trig_moment(int a, int b) {
    if ((a & 1) || (b & 1)) return 0;
    // (a-1)!!(b-1)!!/(a+b)!!
    Rational r = 1;
    for (int k = a - 1; k > 0; k -= 2) r *= k;
    for (int k = b - 1; k > 0; k -= 2) r *= k;
    for (int k = a + b; k > 0; k -= 2) r /= k;
    return r;
}

}  // namespace

TrigPoly sincos4_structure() {
    return {4, {term(4, {0, 1, 2, 3}, {}), term(4, {}, {0, 1, 2, 3})}};
}

TrigPoly triples4_structure() {
    Rational c(1, 4);  // lambda(0) = 1
    return {4, {term(4, {0, 1, 2}, {}, c), term(4, {0, 1, 3}, {}, c), term(4, {0, 2, 3}, {}, c),
                term(4, {1, 2, 3}, {}, c)}};
}

// 2cos(k2-k3) + 2cos(k2-k4) + 2cos(k3-k4) + 4c1(c1+c2+c3+c4) + 3
TrigPoly diamond4_lambda_sq() {
    TrigPoly p{4, {}};
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        p.terms.push_back(term(4, {i, j}, {}, 2));
        p.terms.push_back(term(4, {}, {i, j}, 2));
    }
    p.terms.push_back(term(4, {0, 0}, {}, 4));
    for (int j = 1; j < 4; ++j) p.terms.push_back(term(4, {0, j}, {}, 4));
    p.terms.push_back(term(4, {}, {}, 3));
    return p;
}

std::vector<Rational> cosine_moments(const TrigPoly& p, int N) {
    for (const auto& t : p.terms)
        for (int i = 0; i < p.nvars; ++i)
            if (t.cos_exp[i] < 0 || t.sin_exp[i] < 0)
                throw Error(ErrorKind::UnsupportedTerm, "negative trigonometric power");
    using Key = std::vector<int>;  // cos exponents then sin exponents
    std::map<Key, Rational> cur;
    cur[Key(2 * p.nvars, 0)] = 1;
    std::vector<Rational> out;
    for (int n = 0;; ++n) {
        Rational m;
        for (const auto& [k, c] : cur) {
            Rational r = c;
            for (int i = 0; i < p.nvars && sgn(r) != 0; ++i) r *= trig_moment(k[i], k[p.nvars + i]);
            m += r;
        }
        out.push_back(m);
        if (n == N) break;
        std::map<Key, Rational> next;
        for (const auto& [k, c] : cur)
            for (const auto& t : p.terms) {
                Key e = k;
                for (int i = 0; i < p.nvars; ++i) {
                    e[i] += t.cos_exp[i];
                    e[p.nvars + i] += t.sin_exp[i];
                }
                next[e] += c * t.coeff;
            }
        cur.clear();
        for (auto& [k, c] : next)
            if (sgn(c) != 0) cur.emplace(k, c);
    }
    return out;
}

std::vector<Integer> cosine_table(const TrigPoly& p, int q, int N, bool even_only) {
    int stride = even_only ? 2 : 1;
    auto mom = cosine_moments(p, stride * N);
    std::vector<Integer> out;
    Rational scale = 1, qs = 1;
    for (int i = 0; i < stride; ++i) qs *= q;
    for (int n = 0; n <= N; ++n) {
        Rational v = mom[stride * n] * scale;
        if (v.get_den() != 1) throw std::logic_error("non-integral structure-function coefficient");
        out.push_back(v.get_num());
        scale *= qs;
    }
    return out;
}

CoeffTable cosine_kernel_coeffs(Family f, int N) {
    TrigPoly p;
    if (f == Family::sincos4) p = sincos4_structure();
    else if (f == Family::triples4) p = triples4_structure();
    else throw Error(ErrorKind::UnsupportedLattice, "no structure-function generator for this family");
    LatticeSpec spec = make_spec(f, 4);
    if (f == Family::triples4 && N > 12) {
        // the generic expansion is too slow here; same multinomial expansion, factored
        CoeffTable t{spec, {}};
        for (int n = 0; n <= N; ++n) t.values.push_back(triples4_term(n));
        return t;
    }
    return {spec, cosine_table(p, spec.q, N, true)};
}

}  // namespace lgf
