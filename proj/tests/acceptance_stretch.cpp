// Criterion 15: order-8 operator for the second 4d cosine kernel.

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "lgf/lattice.hpp"
#include "lgf/ode.hpp"

using namespace lgf;

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto t = cosine_kernel_coeffs(Family::triples4, 159);
    auto f = PowerSeries::from_range(t.values.begin(), t.values.end());
    auto op = fit_ode(f, 8, 16);
    bool ok = op.has_value();
    std::string detail;
    if (op) {
        auto ind = indicial(*op);
        std::vector<Rational> roots = ind.at_zero, want = {0, 0, 0, 0, Rational(1, 3), Rational(2, 3),
                                                            Rational(1, 2), Rational(1, 2)};
        std::sort(roots.begin(), roots.end());
        std::sort(want.begin(), want.end());
        ok = roots == want && ind.irrational_at_zero == 0 && !ind.mum;
        for (const auto& r : roots) detail += to_string(r) + " ";
        detail += ind.mum ? "(MUM)" : "(not MUM)";
    } else {
        detail = "no order-8 degree-16 annihilator from 160 coefficients";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s 15 triples kernel order-8 operator (%.1fs) %s\n", ok ? "PASS" : "FAIL", s, detail.c_str());
    return ok ? 0 : 1;
}
