#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgf/lattice.hpp"
#include "lgf/special.hpp"

namespace lgf {

enum class ClosedFormId {
    honeycomb,
    square,
    triangular,
    sc3,
    bcc3,
    fcc3,
    diamond3,
    diamond_algebraic,
    rogers_diamond,
    rogers_fcc,
    map_fcc,
    map_sc,
    map_bcc,
    map_diamond,
    fourd_sc,
};

const char* closed_form_name(ClosedFormId id);
ClosedFormId parse_closed_form(const std::string& s);  // throws ParseError
std::vector<ClosedFormId> all_closed_forms();
LatticeSpec closed_form_lattice(ClosedFormId id);
bool uses_elliptic(ClosedFormId id);

// --- series ---------------------------------------------------------------

enum class Tail { none, corrected };

// P(0;z) = sum a_n (z/q)^(s n). For |z| < 1 the tail is bounded from the term
// ratio; terms = 0 picks enough terms for the precision. At z = 1 with
// Tail::corrected the partial sums are extrapolated assuming
// a_n / q^(s n) ~ n^(-d/2) (1 + c_1/n + ...). Throws DivergentRequest at
// z = 1 in d = 2 and DomainError for |z| > 1.
Estimate lgf_series_eval(const LatticeSpec& spec, const BigFloat& z, unsigned digits, int terms = 0,
                         Tail tail = Tail::none);
// Same in the variable z^2 (even-only and two-site tables), so that negative
// z^2 can be used.
Estimate lgf_series_eval_sq(const LatticeSpec& spec, const BigFloat& z2, unsigned digits, int terms = 0);

// --- closed forms ----------------------------------------------------------

// Convention under which each elliptic closed form's printed K argument is
// read. Every entry was settled by resolve_convention.
EllipticConvention stored_convention(ClosedFormId id);

struct ConventionResolution {
    ClosedFormId id;
    std::vector<EllipticConvention> matching;  // conventions matching the series at z = 0.1, 0.2
    std::string detail;
    bool unique() const { return matching.size() == 1; }
};
ConventionResolution resolve_convention(ClosedFormId id, unsigned digits = 40);

// Elliptic closed forms (honeycomb .. diamond_algebraic, fourd_sc) and the
// Rogers forms. Map ids go through honeycomb_map_eval. Throws DomainError
// outside the real domain of the formula.
BigFloat joyce_closed_form(ClosedFormId id, const BigFloat& z, unsigned digits,
                           std::optional<EllipticConvention> conv = std::nullopt);

BigFloat rogers_3f2(Family target, const BigFloat& z, unsigned digits);

// (8/pi^3) int_0^{pi/2} K(k+(z sin u)) K(k-(z sin u)) du with the diamond k+-.
Estimate fourd_sc_double_elliptic(const BigFloat& z, unsigned digits,
                                  EllipticConvention conv = EllipticConvention::modulus);

struct MapValue {
    BigFloat z;         // z, or z^2 when `squared`
    bool squared = false;
    BigFloat value;     // prefactor * R(xi)^2
};
// R(xi) = sum S_n^(3) xi^(2n) = P_honeycomb(3 xi). Target in {fcc, sc, bcc, diamond}.
MapValue honeycomb_map_eval(Family target, const BigFloat& xi, unsigned digits);

// --- Watson constants ------------------------------------------------------

// c * 2^e2 * 3^e3 * pi^epi * (a + b sqrt3) * prod Gamma(g)^k
struct GammaForm {
    Rational c = 1, e2 = 0, e3 = 0;
    int epi = 0;
    Rational surd_a = 1, surd_b = 0;
    std::vector<std::pair<Rational, int>> gammas;

    BigFloat eval(unsigned digits) const;
    std::string to_string() const;
};
// The rational r with a = r b, if the two forms differ by a rational factor.
std::optional<Rational> rational_ratio(const GammaForm& a, const GammaForm& b);

GammaForm watson_form(Family lattice3d);  // diamond, sc, bcc, fcc
BigFloat watson(Family lattice3d, unsigned digits);

// --- Bessel / Abel ---------------------------------------------------------

// int_0^inf e^(-t) I0(zt/d)^d dt = P_sc(d; z)
Estimate bessel_sc(int d, const BigFloat& z, unsigned digits);
// int_0^inf t I0(zt)^(d+1) K0(t) dt = sum S_n^(d+1) z^(2n)
Estimate bessel_diamond(int d, const BigFloat& z, unsigned digits);
// (2/pi) int_0^1 du/sqrt(1-u^2) int_0^inf t I0(ztu/d)^d K0(t) dt
Estimate bessel_connect_rhs(int d, const BigFloat& z, unsigned digits);

// (2/pi) int_0^1 t^(2n)/sqrt(1-t^2) dt = C(2n,n)/4^n, both sides exact
// (the integral via the Wallis recursion).
Report abel_coefficient_identity(int nmax);
// (2/pi) int_0^1 Z_d(t^2 z^2/d^2)/sqrt(1-t^2) dt, Z_d(x^2) = sum S_n^(d) x^(2n).
Estimate abel_forward(int d, const BigFloat& z, unsigned digits);

struct AbelCheck {
    Report coefficients;
    Estimate integral;
    Estimate series;
    bool numeric_ok = false;
    bool ok() const { return coefficients.ok && numeric_ok; }
};
AbelCheck abel_forward_check(int d, const BigFloat& z, unsigned digits, double tol = 1e-8);

// --- return probability ----------------------------------------------------

struct ReturnProbability {
    BigFloat p_at_one;   // P(0;1); zero when infinite
    BigFloat error;
    BigFloat probability;
    bool certain = false;  // d = 2
    std::string method;
};
ReturnProbability return_probability(const LatticeSpec& spec, unsigned digits);

}  // namespace lgf
