#include "lgf/quadrature.hpp"

#include <cmath>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

struct Node {
    BigFloat x, w;
    bool ok;
};

using NodeFn = std::function<Node(const BigFloat&)>;

BigFloat contribution(const NodeFn& node, const RealFn& f, const BigFloat& t) {
    Node n = node(t);
    if (!n.ok || n.w == 0) return BigFloat(0);
    return n.w * f(n.x);
}

Estimate de_integrate(const NodeFn& node, const RealFn& f, const QuadOptions& opt) {
    PrecisionScope ps(opt.digits);
    BigFloat eps = eps_for(opt.digits);
    BigFloat tol = pow(BigFloat(10), -static_cast<int>(opt.tol_digits));

    // Level 0 (h = 1): walk out until the terms are negligible.
    BigFloat s = contribution(node, f, BigFloat(0));
    BigFloat scale = abs(s);
    BigFloat trunc = 0;
    int tmax[2] = {0, 0};
    for (int side = 0; side < 2; ++side) {
        int quiet = 0;
        for (int k = 1; k < 60; ++k) {
            BigFloat t = side ? BigFloat(-k) : BigFloat(k);
            BigFloat c = contribution(node, f, t);
            s += c;
            if (abs(c) > scale) scale = abs(c);
            tmax[side] = k;
            if (abs(c) <= eps * scale) {
                if (++quiet >= 2) {
                    if (abs(c) > trunc) trunc = abs(c);
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    BigFloat I = s, prev;
    BigFloat err = 0;
    for (int level = 1; level <= opt.max_level; ++level) {
        BigFloat h = ldexp(BigFloat(1), -level);
        BigFloat odd = 0;
        for (int side = 0; side < 2; ++side) {
            long count = static_cast<long>(tmax[side]) << level;
            for (long k = 1; k <= count; k += 2) {
                BigFloat t = h * k;
                odd += contribution(node, f, side ? BigFloat(-t) : t);
            }
        }
        prev = I;
        I = prev / 2 + h * odd;
        err = abs(I - prev) + trunc * h;
        if (level >= 3 && err <= tol * abs(I)) return {I, err + eps * abs(I)};
    }
    throw Error(ErrorKind::PrecisionNotMet,
                "quadrature did not reach 1e-" + std::to_string(opt.tol_digits) + " (estimate " + to_string(err, 5) + ")");
}

}  // namespace

Estimate tanh_sinh(const RealFn& f, const BigFloat& a0, const BigFloat& b0, const QuadOptions& opt) {
    PrecisionScope ps(opt.digits);
    BigFloat a = widen(a0, opt.digits), b = widen(b0, opt.digits);
    BigFloat c = (a + b) / 2, half = (b - a) / 2, pi2 = big_pi() / 2;
    NodeFn node = [=](const BigFloat& t) -> Node {
        BigFloat u = pi2 * sinh(t);
        BigFloat e = exp(-2 * abs(u));
        BigFloat gap = 2 * e / (1 + e);  // 1 - tanh|u|
        BigFloat ch = cosh(u);
        BigFloat w = half * pi2 * cosh(t) / (ch * ch);
        BigFloat x = u >= 0 ? BigFloat(b - half * gap) : BigFloat(a + half * gap);
        if (x <= a || x >= b) return {x, w, false};
        return {x, w, true};
    };
    return de_integrate(node, f, opt);
}

Estimate exp_sinh(const RealFn& f, const QuadOptions& opt) {
    PrecisionScope ps(opt.digits);
    BigFloat pi2 = big_pi() / 2;
    NodeFn node = [=](const BigFloat& t) -> Node {
        BigFloat x = exp(pi2 * sinh(t));
        if (x == 0) return {x, BigFloat(0), false};
        return {x, pi2 * cosh(t) * x, true};
    };
    return de_integrate(node, f, opt);
}

}  // namespace lgf
