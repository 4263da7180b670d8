#include "lgf/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace lgf {

namespace {
unsigned g_default = 0;
}

unsigned default_digits() {
    if (g_default == 0) {
        g_default = kDefaultDigits;
        if (const char* env = std::getenv("LGF_PREC")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 10 && v <= 100000) g_default = static_cast<unsigned>(v);
        }
    }
    return g_default;
}

void set_default_digits(unsigned d) { g_default = d; }

unsigned digits_to_bits(unsigned digits) {
    return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 1;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_); }

BigFloat widen(const BigFloat& x, unsigned digits) { return BigFloat(x, digits); }

BigFloat to_big(const Rational& q) {
    BigFloat x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat to_big(const Integer& z) {
    BigFloat x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

BigFloat big_pi() {
    BigFloat x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

BigFloat eps_for(unsigned digits) {
    BigFloat e = 1;
    return ldexp(e, -static_cast<int>(digits_to_bits(digits)) + 8);
}

std::string to_string(const BigFloat& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

}  // namespace lgf
