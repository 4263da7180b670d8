#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgf/lattice.hpp"

namespace lgf {

class LaurentPoly {
public:
    using Exponent = std::vector<int>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, const Integer& c);
    static LaurentPoly monomial(int nvars, Exponent e, const Integer& c = 1);
    // x_i + 1/x_i
    static LaurentPoly cosine(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    void add(const Exponent& e, const Integer& c);
    Integer constant_term() const;
    Integer eval_at_ones() const;
    int reach(int var) const;  // max |exponent| of var over all terms

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_text() const;  // one "coeff e1 ... ed" line per monomial

private:
    int nvars_;
    std::map<Exponent, Integer> terms_;
};

LaurentPoly parse_kernel(const std::string& text);  // throws ParseError

struct KernelSpec {
    std::string name;
    LaurentPoly kernel;
    // Optional factorisation into polynomials in pairwise disjoint variable
    // sets; the constant term of a power then splits into a product.
    std::vector<LaurentPoly> factors;
    int steps_per_power = 1;
    LatticeSpec lattice;
};

// Canonical kernels: sc = sum(x_i + 1/x_i), bcc = prod(x_i + 1/x_i),
// fcc = sum_{i<j} (x_i + 1/x_i)(x_j + 1/x_j), diamond = (1 + sum x_i)(1 + sum 1/x_i).
KernelSpec kernel(Family f, int d);
KernelSpec user_kernel(const LaurentPoly& p, const LatticeSpec& lattice, int steps_per_power);

// Printed alternatives.
KernelSpec square_product_kernel();  // (x + 1/x)(y + 1/y)
KernelSpec diamond3_printed_kernel();
KernelSpec diamond4_printed_kernel();

struct CtLimits {
    size_t monomial_budget = 50'000'000;
};

// CT(kernel^n) by iterated multiplication; `prune` drops monomials that can
// no longer return to the origin in the remaining steps.
Integer ct_power(const KernelSpec& k, int n, bool prune = true, const CtLimits& lim = {});

// CT(kernel^n) for n = 0..max_power (meet in the middle).
std::vector<Integer> ct_powers(const KernelSpec& k, int max_power, const CtLimits& lim = {});

// Table in the lattice's indexing: index n <-> power 2n for even-only lattices.
CoeffTable ct_series(Family f, int d, int N, const CtLimits& lim = {});
CoeffTable ct_series(const KernelSpec& k, int N, const CtLimits& lim = {});

Report kernel_equivalence(const KernelSpec& a, const KernelSpec& b, int max_power);

}  // namespace lgf
