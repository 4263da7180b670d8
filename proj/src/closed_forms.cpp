#include "lgf/closed_forms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "lgf/ode.hpp"
#include "lgf/quadrature.hpp"

namespace lgf {

namespace {

struct FormInfo {
    ClosedFormId id;
    const char* name;
    Family family;
    int dim;
    bool elliptic;
};

const FormInfo kForms[] = {
    {ClosedFormId::honeycomb, "honeycomb", Family::honeycomb, 2, true},
    {ClosedFormId::square, "square", Family::square, 2, true},
    {ClosedFormId::triangular, "triangular", Family::triangular, 2, true},
    {ClosedFormId::sc3, "sc3", Family::sc, 3, true},
    {ClosedFormId::bcc3, "bcc3", Family::bcc, 3, true},
    {ClosedFormId::fcc3, "fcc3", Family::fcc, 3, true},
    {ClosedFormId::diamond3, "diamond3", Family::diamond, 3, true},
    {ClosedFormId::diamond_algebraic, "diamond-algebraic", Family::diamond, 3, true},
    {ClosedFormId::rogers_diamond, "rogers-diamond", Family::diamond, 3, false},
    {ClosedFormId::rogers_fcc, "rogers-fcc", Family::fcc, 3, false},
    {ClosedFormId::map_fcc, "map-fcc", Family::fcc, 3, false},
    {ClosedFormId::map_sc, "map-sc", Family::sc, 3, false},
    {ClosedFormId::map_bcc, "map-bcc", Family::bcc, 3, false},
    {ClosedFormId::map_diamond, "map-diamond", Family::diamond, 3, false},
    {ClosedFormId::fourd_sc, "fourd-sc", Family::sc, 4, true},
};

const FormInfo& info(ClosedFormId id) {
    for (const auto& f : kForms)
        if (f.id == id) return f;
    throw std::invalid_argument("unknown closed form");
}

// Tables shared across calls; extended on demand.
std::mutex g_table_mutex;
std::map<std::string, std::vector<Integer>> g_tables;

std::vector<Integer> fcc4_by_recurrence(int N) {
    ThetaOperator op = registry("fcc4");
    std::vector<Rational> a(static_cast<size_t>(N) + 1);
    a[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational s;
        for (int l = 1; l <= op.degree() && l <= n; ++l) s += op.P(l).eval(Rational(n - l)) * a[n - l];
        a[n] = -s / op.P(0).eval(Rational(n));
    }
    std::vector<Integer> out;
    for (const auto& v : a) out.push_back(v.get_num());
    return out;
}

std::vector<Integer> table(const LatticeSpec& spec, int N) {
    std::string key = spec_name(spec);
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(key);
        if (it != g_tables.end() && static_cast<int>(it->second.size()) > N)
            return std::vector<Integer>(it->second.begin(), it->second.begin() + N + 1);
    }
    std::vector<Integer> v;
    if (spec.family == Family::fcc && spec.dim == 4)
        v = fcc4_by_recurrence(N);
    else if (spec.family == Family::triples4 || spec.family == Family::sincos4)
        v = spec.family == Family::sincos4 ? coeffs(make_spec(Family::sc, 4), N).values
                                           : cosine_kernel_coeffs(spec.family, N).values;
    else
        v = coeffs(spec, N).values;
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& slot = g_tables[key];
    if (slot.size() < v.size()) slot = v;
    return v;
}

BigFloat Kc(const BigFloat& x, EllipticConvention c, unsigned digits) {
    return elliptic_K(EllipticArg{x, c}, digits);
}

// Printed K(k) where only k^2 is available.
BigFloat K_of_sq(const BigFloat& k2, EllipticConvention c, unsigned digits) {
    if (c == EllipticConvention::modulus) return elliptic_K(EllipticArg::parameter(k2), digits);
    if (k2 < 0) throw Error(ErrorKind::DomainError, "negative k^2 read as a parameter");
    return elliptic_K(EllipticArg::parameter(sqrt(k2)), digits);
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::DomainError, what);
}

BigFloat root(const BigFloat& x, const char* what) {
    require(x >= 0, what);
    return sqrt(x);
}

}  // namespace

const char* closed_form_name(ClosedFormId id) { return info(id).name; }

ClosedFormId parse_closed_form(const std::string& s) {
    for (const auto& f : kForms)
        if (s == f.name) return f.id;
    throw Error(ErrorKind::ParseError, "unknown closed form '" + s + "'");
}

std::vector<ClosedFormId> all_closed_forms() {
    std::vector<ClosedFormId> v;
    for (const auto& f : kForms) v.push_back(f.id);
    return v;
}

LatticeSpec closed_form_lattice(ClosedFormId id) { return make_spec(info(id).family, info(id).dim); }

bool uses_elliptic(ClosedFormId id) { return info(id).elliptic; }

// --- series ------------------------------------------------------------------

namespace {

Estimate sum_in_w(const LatticeSpec& spec, const BigFloat& w0, const BigFloat& aw, unsigned digits, int terms) {
    PrecisionScope ps(digits + 10);
    BigFloat w = widen(w0, digits + 10);
    if (aw >= 1) throw Error(ErrorKind::DomainError, "outside the disc of convergence");
    if (terms <= 0) {
        double lw = std::log(std::max(to_double(aw), 1e-300));
        double need = (digits + 5) * std::log(10.0) / std::max(-lw, 1e-9);
        terms = static_cast<int>(std::min(need + 30, 40000.0));
    }
    auto a = table(spec, terms);
    BigFloat sum = 0, pw = 1, last = 0, before = 0;
    for (int n = 0; n <= terms; ++n) {
        BigFloat t = to_big(a[n]) * pw;
        sum += t;
        if (t != 0) {
            before = last;
            last = t;
        }
        pw *= w;
    }
    BigFloat R = aw;
    if (before != 0 && abs(last / before) > R) R = abs(last / before);
    BigFloat tail = R < 1 ? BigFloat(abs(last) * R / (1 - R)) : BigFloat(abs(last) * 1e6);
    return {sum, tail + eps_for(digits) * abs(sum)};
}

}  // namespace

Estimate lgf_series_eval(const LatticeSpec& spec, const BigFloat& z0, unsigned digits, int terms, Tail tail) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    BigFloat az = abs(z);
    if (az > 1) throw Error(ErrorKind::DomainError, "|z| > 1");
    int s = index_stride(spec);
    BigFloat q = spec.q;
    if (az < 1) {
        BigFloat w = s == 2 ? BigFloat((z / q) * (z / q)) : BigFloat(z / q);
        BigFloat aw = s == 2 ? BigFloat(az * az) : az;
        return sum_in_w(spec, w, aw, digits, terms);
    }
    if (spec.dim <= 2) throw Error(ErrorKind::DivergentRequest, "P(0;1) is infinite in two dimensions");
    if (tail == Tail::none) throw Error(ErrorKind::DomainError, "z = 1 needs the tail correction");
    if (z < 0 && s == 1) throw Error(ErrorKind::DomainError, "z = -1 not supported");
    if (terms <= 0) terms = 1200;
    auto a = table(spec, terms);
    std::vector<BigFloat> t(static_cast<size_t>(terms) + 1);
    BigFloat qs = s == 2 ? BigFloat(q * q) : q, pw = 1;
    for (int n = 0; n <= terms; ++n) {
        t[n] = to_big(a[n]) / pw;
        pw *= qs;
    }
    return richardson_sum(t, Rational(spec.dim, 2) - 1, 12, digits);
}

Estimate lgf_series_eval_sq(const LatticeSpec& spec, const BigFloat& z2_in, unsigned digits, int terms) {
    if (index_stride(spec) != 2) throw std::invalid_argument("lgf_series_eval_sq needs an even table");
    PrecisionScope ps(digits + 10);
    BigFloat z2 = widen(z2_in, digits + 10);
    BigFloat q2 = BigFloat(spec.q) * spec.q;
    return sum_in_w(spec, z2 / q2, abs(z2), digits, terms);
}

// --- closed forms ------------------------------------------------------------

EllipticConvention stored_convention(ClosedFormId) {
    // Resolved against the series for every elliptic form: the printed K
    // argument is the modulus throughout (K(k) = K(m = k^2)), including the
    // footnoted 2F1 form of the diamond LGF, whose argument k_d enters as k_d^2.
    return EllipticConvention::modulus;
}

BigFloat joyce_closed_form(ClosedFormId id, const BigFloat& z0, unsigned digits, std::optional<EllipticConvention> c) {
    EllipticConvention conv = c ? *c : stored_convention(id);
    PrecisionScope ps(digits + 15);
    BigFloat z = widen(z0, digits + 15);
    BigFloat pi = big_pi();
    unsigned kd = digits + 10;
    if (z == 0 && id != ClosedFormId::rogers_diamond && id != ClosedFormId::rogers_fcc) return BigFloat(1);
    switch (id) {
    case ClosedFormId::honeycomb: {
        require(z > 0 && z < 1, "honeycomb form needs 0 < z < 1");
        BigFloat r = sqrt((3 - z) * (1 + z));
        BigFloat k = 4 * z * z / ((3 - z) * sqrt(z * (3 - z) * (1 + z)));
        return 6 * sqrt(BigFloat(3)) / (pi * (3 - z) * r) * Kc(k, conv, kd);
    }
    case ClosedFormId::square:
        require(abs(z) < 1, "square form needs |z| < 1");
        return 2 / pi * Kc(z, conv, kd);
    case ClosedFormId::triangular: {
        require(z > 0 && z < 1, "triangular form needs 0 < z < 1");
        BigFloat w = root(3 + 6 / z, "triangular radicand");
        BigFloat a = 3 / z + 1 - w, b = 3 / z + 1 + w, cc = (a + 1) * (b - 1);
        require(cc > 0, "triangular: c <= 0");
        BigFloat k = root(2 * (b - a) / cc, "triangular modulus");
        return 6 / (pi * z * sqrt(cc)) * Kc(k, conv, kd);
    }
    case ClosedFormId::sc3: {
        require(abs(z) < 1, "sc form needs |z| < 1");
        BigFloat z2 = z * z;
        BigFloat xi = sqrt(1 - sqrt(1 - z2 / 9)) / sqrt(1 + sqrt(1 - z2));
        BigFloat den = pow(1 - xi, 3) * (1 + 3 * xi);
        BigFloat k2 = 16 * pow(xi, 3) / den;
        BigFloat K = 2 / pi * K_of_sq(k2, conv, kd);
        return (1 - 9 * pow(xi, 4)) / den * K * K;
    }
    case ClosedFormId::bcc3: {
        require(abs(z) < 1, "bcc form needs |z| < 1");
        BigFloat k2 = BigFloat(1) / 2 - sqrt(1 - z * z) / 2;
        BigFloat K = 2 / pi * K_of_sq(k2, conv, kd);
        return K * K;
    }
    case ClosedFormId::fcc3: {
        require(z > -3 && z < 1, "fcc form needs -3 < z < 1");
        BigFloat r = sqrt(3 * (1 - z) * (3 + z));
        BigFloat u = 6 + 2 * r;
        BigFloat xi = 2 * z / (u + sqrt(u * u + 12 * z * z));
        BigFloat den = pow(1 - xi, 3) * (1 + 3 * xi);
        BigFloat k2 = 16 * pow(xi, 3) / den;
        BigFloat K = 2 / pi * K_of_sq(k2, conv, kd);
        BigFloat p = 1 + 3 * xi * xi;
        return p * p / den * K * K;
    }
    case ClosedFormId::diamond3:
    case ClosedFormId::diamond_algebraic: {
        require(abs(z) < 1, "diamond form needs |z| < 1");
        BigFloat z2 = z * z, a = sqrt(4 - z2), b = sqrt(1 - z2);
        BigFloat kp2 = BigFloat(1) / 2 + z2 / 4 * a - (2 - z2) * b / 4;
        BigFloat km2 = BigFloat(1) / 2 - z2 / 4 * a - (2 - z2) * b / 4;
        if (id == ClosedFormId::diamond3) return 4 / (pi * pi) * K_of_sq(kp2, conv, kd) * K_of_sq(km2, conv, kd);
        BigFloat K = 2 / pi * K_of_sq(km2, conv, kd);
        return (a - b) * K * K;
    }
    case ClosedFormId::rogers_diamond: return rogers_3f2(Family::diamond, z, digits);
    case ClosedFormId::rogers_fcc: return rogers_3f2(Family::fcc, z, digits);
    case ClosedFormId::fourd_sc: return fourd_sc_double_elliptic(z, digits, conv).value;
    default: throw std::invalid_argument("map forms are evaluated with honeycomb_map_eval");
    }
}

BigFloat rogers_3f2(Family target, const BigFloat& z0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    std::vector<Rational> up{Rational(1, 3), Rational(1, 2), Rational(2, 3)}, lo{Rational(1), Rational(1)};
    BigFloat x, pre = 1;
    if (target == Family::diamond) {
        BigFloat w = 1 - z * z / 4;
        require(w > 0, "rogers diamond: 1 - z^2/4 <= 0");
        x = 27 * pow(z, 4) / (64 * w * w * w);
        pre = 1 / w;
    } else if (target == Family::fcc) {
        x = z * z * (3 + z) / 4;
    } else {
        throw Error(ErrorKind::UnsupportedLattice, "Rogers forms exist for diamond and fcc only");
    }
    require(abs(x) < 1, "3F2 argument outside the unit disc");
    return pre * pFq_eval(up, lo, x, digits).value;
}

Estimate fourd_sc_double_elliptic(const BigFloat& z0, unsigned digits, EllipticConvention conv) {
    PrecisionScope ps(digits + 15);
    BigFloat z = widen(z0, digits + 15);
    require(abs(z) < 1, "4d sc form needs |z| < 1");
    BigFloat pi = big_pi();
    unsigned kd = digits + 10;
    RealFn f = [&](const BigFloat& u) {
        BigFloat w = z * sin(u), w2 = w * w;
        BigFloat a = sqrt(4 - w2), b = sqrt(1 - w2);
        BigFloat kp2 = BigFloat(1) / 2 + w2 / 4 * a - (2 - w2) * b / 4;
        BigFloat km2 = BigFloat(1) / 2 - w2 / 4 * a - (2 - w2) * b / 4;
        return K_of_sq(kp2, conv, kd) * K_of_sq(km2, conv, kd);
    };
    QuadOptions opt{digits + 15, digits + 2, 14};
    Estimate I = tanh_sinh(f, BigFloat(0), pi / 2, opt);
    BigFloat c = 8 / (pi * pi * pi);
    return {c * I.value, c * I.error};
}

MapValue honeycomb_map_eval(Family target, const BigFloat& xi0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat xi = widen(xi0, digits + 10);
    require(abs(xi) < BigFloat(1) / 3, "honeycomb maps need |xi| < 1/3");
    BigFloat x2 = xi * xi;
    BigFloat R = lgf_series_eval(make_spec(Family::honeycomb, 2), 3 * xi, digits + 5).value;
    BigFloat R2 = R * R;
    MapValue mv;
    switch (target) {
    case Family::fcc: {
        BigFloat u = 1 - 3 * x2;
        mv.z = -12 * x2 / (u * u);
        mv.value = u * u * R2;
        break;
    }
    case Family::sc: {
        BigFloat v = 1 - 9 * x2 * x2;
        mv.z = 36 * x2 * (1 - 9 * x2) * (1 - x2) / (v * v);
        mv.squared = true;
        mv.value = v * R2;
        break;
    }
    case Family::bcc: {
        BigFloat a = 1 - 9 * x2, b = 1 - x2;
        mv.z = -64 * x2 * x2 * x2 / (a * b * b * b);
        mv.squared = true;
        mv.value = sqrt(a) * b * sqrt(b) * R2;
        break;
    }
    case Family::diamond: {
        BigFloat a = 1 - 9 * x2, b = 1 - x2;
        mv.z = -16 * x2 / (a * b);
        mv.squared = true;
        mv.value = a * b * R2;
        break;
    }
    default: throw Error(ErrorKind::UnsupportedLattice, "honeycomb maps exist for fcc, sc, bcc, diamond");
    }
    return mv;
}

ConventionResolution resolve_convention(ClosedFormId id, unsigned digits) {
    ConventionResolution r{id, {}, {}};
    std::ostringstream os;
    if (!uses_elliptic(id)) {
        r.detail = "no elliptic integral";
        return r;
    }
    LatticeSpec spec = closed_form_lattice(id);
    for (auto c : {EllipticConvention::modulus, EllipticConvention::parameter}) {
        bool ok = true;
        os << convention_name(c) << ":";
        for (const char* zs : {"0.1", "0.2"}) {
            PrecisionScope ps(digits + 10);
            BigFloat z(zs);
            try {
                BigFloat v = joyce_closed_form(id, z, digits, c);
                BigFloat s = lgf_series_eval(spec, z, digits).value;
                BigFloat d = abs(v - s);
                os << " |diff(" << zs << ")| = " << to_string(d, 3);
                if (d > BigFloat("1e-10")) ok = false;
            } catch (const Error& e) {
                os << " (" << zs << ": " << e.what() << ")";
                ok = false;
            }
        }
        os << "; ";
        if (ok) r.matching.push_back(c);
    }
    r.detail = os.str();
    return r;
}

// --- Watson ------------------------------------------------------------------

BigFloat GammaForm::eval(unsigned digits) const {
    PrecisionScope ps(digits + 10);
    BigFloat v = to_big(c) * pow(BigFloat(2), to_big(e2)) * pow(BigFloat(3), to_big(e3)) * pow(big_pi(), epi);
    v *= to_big(surd_a) + to_big(surd_b) * sqrt(BigFloat(3));
    for (const auto& [g, k] : gammas) v *= pow(gamma_rational(g, digits + 10), k);
    return v;
}

std::string GammaForm::to_string() const {
    std::ostringstream os;
    os << lgf::to_string(c);
    if (sgn(e2) != 0) os << " * 2^(" << lgf::to_string(e2) << ")";
    if (sgn(e3) != 0) os << " * 3^(" << lgf::to_string(e3) << ")";
    if (epi) os << " * pi^(" << epi << ")";
    if (sgn(surd_b) != 0) os << " * (" << lgf::to_string(surd_a) << " + " << lgf::to_string(surd_b) << " sqrt3)";
    for (const auto& [g, k] : gammas) os << " * Gamma(" << lgf::to_string(g) << ")^" << k;
    return os.str();
}

std::optional<Rational> rational_ratio(const GammaForm& a, const GammaForm& b) {
    auto norm = [](const GammaForm& f) {
        std::map<Rational, int> m;
        for (const auto& [g, k] : f.gammas) m[g] += k;
        return m;
    };
    if (a.epi != b.epi || norm(a) != norm(b)) return std::nullopt;
    // surds proportional over Q
    if (a.surd_a * b.surd_b != a.surd_b * b.surd_a) return std::nullopt;
    Rational surd = sgn(b.surd_a) != 0 ? Rational(a.surd_a / b.surd_a) : Rational(a.surd_b / b.surd_b);
    Rational d2 = a.e2 - b.e2, d3 = a.e3 - b.e3;
    if (d2.get_den() != 1 || d3.get_den() != 1) return std::nullopt;
    Rational r = a.c / b.c * surd;
    long i2 = d2.get_num().get_si(), i3 = d3.get_num().get_si();
    for (long i = 0; i < std::abs(i2); ++i) r = i2 > 0 ? Rational(r * 2) : Rational(r / 2);
    for (long i = 0; i < std::abs(i3); ++i) r = i3 > 0 ? Rational(r * 3) : Rational(r / 3);
    return r;
}

GammaForm watson_form(Family f) {
    GammaForm g;
    switch (f) {
    case Family::sc:
        g.c = Rational(1, 32);
        g.epi = -3;
        g.surd_a = -1;
        g.surd_b = 1;
        g.gammas = {{Rational(1, 24), 2}, {Rational(11, 24), 2}};
        return g;
    case Family::bcc:
        g.c = Rational(1, 4);
        g.epi = -3;
        g.gammas = {{Rational(1, 4), 4}};
        return g;
    case Family::fcc:
        g.c = 9;
        g.e2 = Rational(-14, 3);
        g.epi = -4;
        g.gammas = {{Rational(1, 3), 6}};
        return g;
    case Family::diamond:
        g.c = 3;
        g.e2 = Rational(-8, 3);
        g.epi = -4;
        g.gammas = {{Rational(1, 3), 6}};
        return g;
    default: throw Error(ErrorKind::UnsupportedLattice, "Watson constants exist for sc, bcc, fcc, diamond");
    }
}

BigFloat watson(Family f, unsigned digits) { return watson_form(f).eval(digits); }

// --- Bessel / Abel -----------------------------------------------------------

namespace {

QuadOptions bessel_opts(unsigned digits) { return {digits + 10, digits, 14}; }

}  // namespace

Estimate bessel_sc(int d, const BigFloat& z0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    require(d >= 1 && abs(z) <= 1, "bessel_sc needs d >= 1, |z| <= 1");
    require(abs(z) < 1 || d >= 3, "bessel_sc diverges at |z| = 1 for d < 3");
    BigFloat c = abs(z) / d, decay = 1 - abs(z);
    RealFn f = [&](const BigFloat& t) { return exp(-decay * t) * pow(bessel_I0_scaled(c * t, digits + 5), d); };
    return exp_sinh(f, bessel_opts(digits));
}

Estimate bessel_diamond(int d, const BigFloat& z0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    require(d >= 1 && abs(z) * (d + 1) <= 1, "bessel_diamond needs |z| <= 1/(d+1)");
    BigFloat az = abs(z);
    BigFloat decay = 1 - (d + 1) * az;
    RealFn f = [&](const BigFloat& t) {
        return t * exp(-decay * t) * pow(bessel_I0_scaled(az * t, digits + 5), d + 1) *
               bessel_K0_scaled(t, digits + 5);
    };
    return exp_sinh(f, bessel_opts(digits));
}

Estimate bessel_connect_rhs(int d, const BigFloat& z0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    require(d >= 1 && abs(z) < 1, "connect needs |z| < 1");
    BigFloat az = abs(z), pi = big_pi();
    unsigned inner = digits + 4;
    BigFloat worst = 0;
    // u = sin(phi) removes the endpoint singularity of 1/sqrt(1-u^2)
    RealFn outer = [&](const BigFloat& phi) {
        BigFloat c = az * sin(phi) / d;
        BigFloat decay = 1 - d * c;
        RealFn g = [&](const BigFloat& t) {
            return t * exp(-decay * t) * pow(bessel_I0_scaled(c * t, inner + 5), d) * bessel_K0_scaled(t, inner + 5);
        };
        Estimate e = exp_sinh(g, bessel_opts(inner));
        if (e.error > worst) worst = e.error;
        return e.value;
    };
    QuadOptions opt{digits + 10, digits, 12};
    Estimate I = tanh_sinh(outer, BigFloat(0), pi / 2, opt);
    return {2 / pi * I.value, 2 / pi * I.error + worst};
}

Report abel_coefficient_identity(int nmax) {
    Rational wallis = 1;  // (2/pi) int_0^1 t^(2n) / sqrt(1-t^2) dt
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) wallis *= Rational(2 * n - 1, 2 * n);
        Rational rhs(binomial(2 * n, n));
        for (int i = 0; i < n; ++i) rhs /= 4;
        if (wallis != rhs) return Report::fail(n, "Wallis integral " + to_string(wallis) + " != " + to_string(rhs));
    }
    return Report::pass("n <= " + std::to_string(nmax));
}

Estimate abel_forward(int d, const BigFloat& z0, unsigned digits) {
    PrecisionScope ps(digits + 10);
    BigFloat z = widen(z0, digits + 10);
    require(d >= 1 && abs(z) < 1, "abel_forward needs |z| < 1");
    BigFloat az = abs(z), pi = big_pi();
    double lz = std::log(std::max(to_double(az), 1e-300));
    int N = static_cast<int>(std::min((digits + 5) * std::log(10.0) / (-2 * lz) + 30, 40000.0));
    auto S = multinomial_sq_table(N, d);
    std::vector<BigFloat> Sf;
    for (const auto& s : S) Sf.push_back(to_big(s));
    BigFloat c = az * az / (BigFloat(d) * d);
    RealFn f = [&](const BigFloat& phi) {
        BigFloat s = sin(phi);
        BigFloat x = c * s * s;  // t^2 z^2 / d^2
        BigFloat acc = 0;
        for (int n = N; n >= 0; --n) acc = acc * x + Sf[n];
        return acc;
    };
    QuadOptions opt{digits + 10, digits, 12};
    Estimate I = tanh_sinh(f, BigFloat(0), pi / 2, opt);
    // series truncation: terms ~ (t z)^(2n)
    BigFloat trunc = pow(az, 2 * (N + 1)) * 10;
    return {2 / pi * I.value, 2 / pi * I.error + trunc};
}

AbelCheck abel_forward_check(int d, const BigFloat& z, unsigned digits, double tol) {
    AbelCheck c;
    c.coefficients = abel_coefficient_identity(20);
    c.integral = abel_forward(d, z, digits);
    c.series = lgf_series_eval(make_spec(Family::sc, d), z, digits);
    PrecisionScope ps(digits + 10);
    c.numeric_ok = abs(c.integral.value - c.series.value) < tol;
    return c;
}

// --- return probability --------------------------------------------------------

ReturnProbability return_probability(const LatticeSpec& spec, unsigned digits) {
    ReturnProbability r;
    PrecisionScope ps(digits + 10);
    if (spec.dim <= 2) {
        r.certain = true;
        r.p_at_one = 0;
        r.error = 0;
        r.probability = 1;
        r.method = "recurrent: P(0;1) diverges, return is certain";
        return r;
    }
    Estimate e;
    if (spec.dim == 3 && (spec.family == Family::sc || spec.family == Family::bcc || spec.family == Family::fcc ||
                          spec.family == Family::diamond)) {
        e = {watson(spec.family, digits), eps_for(digits)};
        r.method = "Watson closed form";
    } else if (spec.family == Family::sc || spec.family == Family::sincos4) {
        e = bessel_sc(spec.dim, BigFloat(1), digits);
        r.method = "Bessel quadrature int e^-t I0(t/d)^d dt";
    } else if (spec.family == Family::diamond) {
        e = bessel_diamond(spec.dim, BigFloat(1) / (spec.dim + 1), digits);
        r.method = "Bessel quadrature int t I0(t/(d+1))^(d+1) K0(t) dt";
    } else if (spec.family == Family::bcc || (spec.family == Family::fcc && spec.dim == 4)) {
        e = lgf_series_eval(spec, BigFloat(1), digits, 0, Tail::corrected);
        r.method = "series with extrapolated tail";
    } else {
        throw Error(ErrorKind::UnsupportedLattice, "no P(0;1) evaluator for " + spec_name(spec));
    }
    r.p_at_one = e.value;
    r.error = e.error;
    r.probability = 1 - 1 / e.value;
    return r;
}

}  // namespace lgf
