#include "lgf/ramanujan.hpp"

#include <algorithm>

#include "lgf/errors.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

BigFloat Surd::eval(unsigned digits) const {
    // a and b can be huge with a + b sqrt3 small: carry their size as guard digits
    size_t bits = std::max(mpz_sizeinbase(a.get_num_mpz_t(), 2), mpz_sizeinbase(b.get_num_mpz_t(), 2));
    bits = std::max(bits, std::max(mpz_sizeinbase(a.get_den_mpz_t(), 2), mpz_sizeinbase(b.get_den_mpz_t(), 2)));
    PrecisionScope ps(digits + 10 + static_cast<unsigned>(bits * 0.30103) * 2);
    return to_big(a) + to_big(b) * sqrt(BigFloat(3));
}

std::string Surd::to_string() const { return lgf::to_string(a) + " + " + lgf::to_string(b) + " sqrt3"; }

namespace {

struct Entry {
    RamanujanId id;
    const char* name;
};
const Entry kNames[] = {{RamanujanId::diam32, "diam-32"},   {RamanujanId::diam64, "diam-64"},
                        {RamanujanId::diam_sqrt3, "diam-sqrt3"}, {RamanujanId::sc484, "sc-484"},
                        {RamanujanId::bcc256, "bcc-256"},   {RamanujanId::bcc4096, "bcc-4096"}};

std::vector<Integer> coefficient_table(RamanujanId id, int N) {
    switch (id) {
    case RamanujanId::diam32:
    case RamanujanId::diam64:
    case RamanujanId::diam_sqrt3: return multinomial_sq_table(N, 4);
    case RamanujanId::sc484: return coeffs(make_spec(Family::sc, 3), N).values;
    case RamanujanId::bcc256:
    case RamanujanId::bcc4096: return coeffs(make_spec(Family::bcc, 3), N).values;
    }
    return {};
}

}  // namespace

const char* ramanujan_name(RamanujanId id) {
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    return "?";
}

RamanujanId parse_ramanujan(const std::string& s) {
    for (const auto& e : kNames)
        if (s == e.name) return e.id;
    throw Error(ErrorKind::ParseError, "unknown series '" + s + "'");
}

std::vector<RamanujanId> all_ramanujan() {
    std::vector<RamanujanId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
}

RamanujanSeries ramanujan_series(RamanujanId id) {
    switch (id) {
    case RamanujanId::diam32: return {id, Surd(3), Surd(1), Surd(Rational(-1, 32)), Surd(2), "S_n^(4)"};
    case RamanujanId::diam64:
        return {id, Surd(5), Surd(1), Surd(Rational(1, 64)), Surd(0, Rational(8, 3)), "S_n^(4)"};
    case RamanujanId::diam_sqrt3:
        return {id, Surd(6), Surd(3, -1), Surd(Rational(-5, 4), Rational(3, 4)), Surd(9, 5), "S_n^(4)"};
    case RamanujanId::sc484:
        return {id, Surd(520), Surd(159, -48), Surd(Rational(-139, 484), Rational(80, 484)), Surd(128, 58),
                "C(2n,n) S_n^(3)"};
    case RamanujanId::bcc256: return {id, Surd(6), Surd(1), Surd(Rational(1, 256)), Surd(4), "C(2n,n)^3"};
    case RamanujanId::bcc4096: return {id, Surd(42), Surd(5), Surd(Rational(1, 4096)), Surd(16), "C(2n,n)^3"};
    }
    throw std::invalid_argument("unknown series");
}

RamanujanResult ramanujan_eval(RamanujanId id, int terms, unsigned digits) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    auto s = ramanujan_series(id);
    auto c = coefficient_table(id, terms - 1);
    Surd sum, pw(1);
    for (int n = 0; n < terms; ++n) {
        Surd coef = s.A * Surd(n) + s.B;
        sum = sum + coef * pw * Surd(Rational(c[n]));
        pw = pw * s.x;
    }
    RamanujanResult r;
    r.exact_partial = sum;
    PrecisionScope ps(digits + 10);
    r.sum = sum.eval(digits);
    r.target = s.target_over_pi.eval(digits) / big_pi();
    r.error = abs(r.sum - r.target);
    return r;
}

GeneralFormResult ramanujan_general_form_check(unsigned digits, int terms, double alpha_shift) {
    Surd alpha(Rational(1104, 242), Rational(-591, 242)), beta(Rational(1280, 121), Rational(-580, 121));
    auto s = ramanujan_series(RamanujanId::sc484);
    GeneralFormResult g;
    // (A n + B) = T (alpha + beta n) for all n
    g.termwise_consistent = s.target_over_pi * alpha == s.B && s.target_over_pi * beta == s.A;
    auto c = coefficient_table(RamanujanId::sc484, terms - 1);
    Surd f, tf, pw(1);
    for (int n = 0; n < terms; ++n) {
        Surd t = pw * Surd(Rational(c[n]));
        f = f + t;
        tf = tf + Surd(n) * t;
        pw = pw * s.x;
    }
    PrecisionScope ps(digits + 10);
    g.f = f.eval(digits);
    g.theta_f = tf.eval(digits);
    BigFloat a = alpha.eval(digits) + alpha_shift;
    g.residual = a * g.f + beta.eval(digits) * g.theta_f - 1 / big_pi();
    return g;
}

}  // namespace lgf
