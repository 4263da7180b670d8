#pragma once

#include "lgf/bigfloat.hpp"
#include "lgf/constant_term.hpp"

namespace lgf {

// m(F) = average of log|F| over the unit torus. The last variable is
// integrated exactly by Jensen's formula (roots in double precision), the
// others by the periodic trapezoid rule; the grid is doubled until two
// successive values agree to `tol`. Error = that difference. Double-precision
// arithmetic only; where a root crosses the unit circle the integrand has a
// square-root kink and the grid error decays like M^(-3/2).
struct MahlerResult {
    Estimate m;
    BigFloat M;  // exp(m)
    int grid = 0;
};
MahlerResult log_mahler_measure(const LaurentPoly& F, double tol = 1e-6, int max_grid = 1 << 16);

}  // namespace lgf
