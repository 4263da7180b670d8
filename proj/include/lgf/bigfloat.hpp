#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "lgf/series.hpp"

namespace lgf {

using BigFloat = boost::multiprecision::mpfr_float;

// Working precision is given in decimal digits throughout.
inline constexpr unsigned kDefaultDigits = 128;

unsigned default_digits();           // LGF_PREC or kDefaultDigits
void set_default_digits(unsigned d);

unsigned digits_to_bits(unsigned digits);

// Sets the precision of newly created BigFloats for the current scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

// Copy of x carried at `digits` precision. Arithmetic on a BigFloat runs at
// the precision of its operands, so inputs are widened on entry.
BigFloat widen(const BigFloat& x, unsigned digits);

BigFloat to_big(const Rational& q);
BigFloat to_big(const Integer& z);
BigFloat big_pi();
BigFloat eps_for(unsigned digits);  // 2^(-bits+8), the relative error contract
std::string to_string(const BigFloat& x, unsigned digits);
double to_double(const BigFloat& x);

// Value together with an error estimate.
struct Estimate {
    BigFloat value;
    BigFloat error;
};

}  // namespace lgf
