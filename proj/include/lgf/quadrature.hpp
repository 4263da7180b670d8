#pragma once

#include <functional>

#include "lgf/bigfloat.hpp"

namespace lgf {

using RealFn = std::function<BigFloat(const BigFloat&)>;

// Double-exponential quadrature. Levels halve the step h starting from 1.
// Reported error = |I_h - I_2h| (discretization) + the largest neglected
// end contribution (truncation of the t-range). Throws PrecisionNotMet
// if the relative target 10^(-tol_digits) is not reached by max_level.
struct QuadOptions {
    unsigned digits = 40;     // working precision
    unsigned tol_digits = 30;
    int max_level = 12;
};

// Finite interval, integrand bounded and smooth inside.
Estimate tanh_sinh(const RealFn& f, const BigFloat& a, const BigFloat& b, const QuadOptions& opt = {});

// [0, inf) with exponential or power-law decay faster than 1/x.
Estimate exp_sinh(const RealFn& f, const QuadOptions& opt = {});

}  // namespace lgf
