#pragma once

#include <string>
#include <vector>

#include "lgf/series.hpp"

namespace lgf {

enum class Family { honeycomb, square, triangular, diamond, sc, bcc, fcc, sincos4, triples4 };

// even_only: index n holds the 2n-step count. two_site: index n holds the
// 2n-step count, but the generating kernel is raised to the n-th power.
// all_n: index n holds the n-step count.
enum class Parity { even_only, all_n, two_site };

struct LatticeSpec {
    Family family;
    int dim;
    int q;  // coordination number; P(0;z) = sum a_n (z/q)^n
    Parity parity;
};

const char* family_name(Family f);
Family parse_family(const std::string& s);  // throws UnsupportedLattice
LatticeSpec make_spec(Family f, int dim);
std::string spec_name(const LatticeSpec& s);  // e.g. "sc-3"

// Exponent of z attached to table index n (2 for even-indexed tables).
int index_stride(const LatticeSpec& s);

struct CoeffTable {
    LatticeSpec spec;
    std::vector<Integer> values;
    size_t count() const { return values.size(); }
};

Integer multinomial_sq_sum(long n, int d);  // S_n^(d)
std::vector<Integer> multinomial_sq_table(int N, int d);

CoeffTable coeffs(const LatticeSpec& spec, int N);

// Printed alternative forms, kept separately so they can be checked
// against the recurrence-based generators.
Integer diamond3_binomial_sum(long n);
Integer multinomial5_double_sum(long n);
// Terminating pFq summed exactly; stops at the first vanishing upper Pochhammer.
Rational terminating_hypergeometric(const std::vector<Rational>& upper,
                                   const std::vector<Rational>& lower, const Rational& x);
Integer fcc4_printed_fivefold(long n);
Integer fcc4_fivefold(long n);
Integer triples4_term(long n);

Report relation_triangular_from_honeycomb(int N);
Report relation_fcc_from_diamond(int N);
Report relation_hypercubic_from_hyperdiamond(int d, int N);

// Trigonometric polynomial sum_t c_t prod_i cos^{a_ti}(k_i) sin^{b_ti}(k_i).
struct TrigTerm {
    Rational coeff;
    std::vector<int> cos_exp;
    std::vector<int> sin_exp;
};
struct TrigPoly {
    int nvars = 0;
    std::vector<TrigTerm> terms;
};

TrigPoly sincos4_structure();   // c1c2c3c4 + s1s2s3s4
TrigPoly triples4_structure();  // (c1c2c3 + c1c2c4 + c1c3c4 + c2c3c4)/4
TrigPoly diamond4_lambda_sq();  // the 4d diamond lambda^2 with cos(ki-kj) expanded

// <lambda^n> over the full torus for n = 0..N, exactly.
std::vector<Rational> cosine_moments(const TrigPoly& p, int N);

// q^(s n) <lambda^(s n)> for n = 0..N, s = 2 for even-only lattices.
std::vector<Integer> cosine_table(const TrigPoly& p, int q, int N, bool even_only);

// Table for sincos4 / triples4 built from the structure function:
// a_n = q^(2n) <lambda^(2n)>.
CoeffTable cosine_kernel_coeffs(Family f, int N);

}  // namespace lgf
