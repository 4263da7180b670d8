#include "lgf/constant_term.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace lgf {

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) {
    LaurentPoly p(nvars);
    p.add(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponent e, const Integer& c) {
    LaurentPoly p(nvars);
    p.add(e, c);
    return p;
}

LaurentPoly LaurentPoly::cosine(int nvars, int i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    LaurentPoly p = monomial(nvars, e);
    e[i] = -1;
    p.add(e, 1);
    return p;
}

void LaurentPoly::add(const Exponent& e, const Integer& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong length");
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Integer LaurentPoly::constant_term() const {
    auto it = terms_.find(Exponent(nvars_, 0));
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::eval_at_ones() const {
    Integer s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

int LaurentPoly::reach(int var) const {
    int r = 0;
    for (const auto& [e, c] : terms_) r = std::max(r, std::abs(e[var]));
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LaurentPoly::Exponent e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

std::string LaurentPoly::to_text() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        os << c.get_str();
        for (int x : e) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

LaurentPoly parse_kernel(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int nvars = -1, lineno = 0;
    std::vector<std::pair<LaurentPoly::Exponent, Integer>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        Integer c;
        if (c.set_str(toks[0], 10) != 0)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad coefficient");
        LaurentPoly::Exponent e;
        for (size_t i = 1; i < toks.size(); ++i) {
            char* end = nullptr;
            long v = std::strtol(toks[i].c_str(), &end, 10);
            if (*end != '\0' || v < -1000000 || v > 1000000)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad exponent");
            e.push_back(static_cast<int>(v));
        }
        if (nvars < 0) nvars = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != nvars || nvars == 0)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                                   std::to_string(nvars) + " exponents");
        rows.emplace_back(std::move(e), c);
    }
    if (nvars < 0) throw Error(ErrorKind::ParseError, "empty kernel");
    LaurentPoly p(nvars);
    for (auto& [e, c] : rows) p.add(e, c);
    return p;
}

// ---- kernels -------------------------------------------------------------

namespace {

using Exp = LaurentPoly::Exponent;

LaurentPoly unit(int nvars, std::initializer_list<std::pair<int, int>> powers) {
    Exp e(nvars, 0);
    for (auto [i, k] : powers) e[i] += k;
    return LaurentPoly::monomial(nvars, e);
}

LaurentPoly sum_of(std::initializer_list<LaurentPoly> ps) {
    LaurentPoly r(ps.begin()->nvars());
    for (const auto& p : ps) r = r + p;
    return r;
}

LaurentPoly cos_sum(int d) {
    LaurentPoly r(d);
    for (int i = 0; i < d; ++i) r = r + LaurentPoly::cosine(d, i);
    return r;
}

}  // namespace

KernelSpec kernel(Family f, int d) {
    LatticeSpec spec = make_spec(f, d);
    d = spec.dim;
    KernelSpec k{spec_name(spec), LaurentPoly(d), {}, 1, spec};
    switch (f) {
    case Family::square:
    case Family::sc: k.kernel = cos_sum(d); break;
    case Family::triangular:
        k.kernel = sum_of({cos_sum(2), unit(2, {{0, -1}, {1, 1}}), unit(2, {{0, 1}, {1, -1}})});
        break;
    case Family::bcc: {
        LaurentPoly p = LaurentPoly::constant(d, 1);
        for (int i = 0; i < d; ++i) {
            p = p * LaurentPoly::cosine(d, i);
            k.factors.push_back(LaurentPoly::cosine(1, 0));
        }
        k.kernel = p;
        break;
    }
    case Family::fcc: {
        LaurentPoly p(d);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) p = p + LaurentPoly::cosine(d, i) * LaurentPoly::cosine(d, j);
        k.kernel = p;
        break;
    }
    case Family::honeycomb:
    case Family::diamond: {
        LaurentPoly a = LaurentPoly::constant(d, 1), b = LaurentPoly::constant(d, 1);
        for (int i = 0; i < d; ++i) {
            a = a + unit(d, {{i, 1}});
            b = b + unit(d, {{i, -1}});
        }
        k.kernel = a * b;
        k.steps_per_power = 2;
        break;
    }
    case Family::sincos4: {
        // (prod(x+1/x) + prod(x-1/x))/2: sign patterns with an even number of minus signs
        LaurentPoly p(4);
        for (int mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) % 2) continue;
            Exp e(4);
            for (int i = 0; i < 4; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
            p.add(e, 1);
        }
        k.kernel = p;
        break;
    }
    case Family::triples4: {
        LaurentPoly p(4);
        for (int skip = 3; skip >= 0; --skip) {
            LaurentPoly t = LaurentPoly::constant(4, 1);
            for (int i = 0; i < 4; ++i)
                if (i != skip) t = t * LaurentPoly::cosine(4, i);
            p = p + t;
        }
        k.kernel = p;
        break;
    }
    }
    return k;
}

KernelSpec user_kernel(const LaurentPoly& p, const LatticeSpec& lattice, int steps_per_power) {
    return {"user", p, {}, steps_per_power, lattice};
}

KernelSpec square_product_kernel() {
    KernelSpec k = kernel(Family::square, 2);
    k.name = "square-product";
    k.kernel = LaurentPoly::cosine(2, 0) * LaurentPoly::cosine(2, 1);
    k.factors = {LaurentPoly::cosine(1, 0), LaurentPoly::cosine(1, 0)};
    return k;
}

// (1/x + x + z(y + 1/y)) (x + 1/x + (y + 1/y)/z), variables x, y, z
KernelSpec diamond3_printed_kernel() {
    KernelSpec k = kernel(Family::diamond, 3);
    k.name = "diamond-3-printed";
    LaurentPoly a = sum_of({unit(3, {{0, -1}}), unit(3, {{0, 1}}), unit(3, {{2, 1}, {1, 1}}),
                            unit(3, {{2, 1}, {1, -1}})});
    LaurentPoly b = sum_of({unit(3, {{0, 1}}), unit(3, {{0, -1}}), unit(3, {{1, 1}, {2, -1}}),
                            unit(3, {{1, -1}, {2, -1}})});
    k.kernel = a * b;
    return k;
}

// (1/x + x + zy + z/y + w/x) (x + 1/x + y/z + 1/(yz) + x/w), variables x, y, z, w
KernelSpec diamond4_printed_kernel() {
    KernelSpec k = kernel(Family::diamond, 4);
    k.name = "diamond-4-printed";
    LaurentPoly a = sum_of({unit(4, {{0, -1}}), unit(4, {{0, 1}}), unit(4, {{2, 1}, {1, 1}}),
                            unit(4, {{2, 1}, {1, -1}}), unit(4, {{3, 1}, {0, -1}})});
    LaurentPoly b = sum_of({unit(4, {{0, 1}}), unit(4, {{0, -1}}), unit(4, {{1, 1}, {2, -1}}),
                            unit(4, {{1, -1}, {2, -1}}), unit(4, {{0, 1}, {3, -1}})});
    k.kernel = a * b;
    return k;
}

// ---- engine --------------------------------------------------------------

namespace {

struct Overflow {};

// Exponent vectors packed 8 bits per variable with offset 128; adding two
// packed keys and subtracting the packed origin adds the exponents, as long
// as every exponent stays within [-127, 127].
struct Packing {
    int nvars;
    uint64_t origin = 0;

    explicit Packing(int n) : nvars(n) {
        for (int i = 0; i < n; ++i) origin |= uint64_t(128) << (8 * i);
    }
    uint64_t pack(const Exp& e) const {
        uint64_t k = 0;
        for (int i = 0; i < nvars; ++i) k |= uint64_t(e[i] + 128) << (8 * i);
        return k;
    }
    int component(uint64_t k, int i) const { return int((k >> (8 * i)) & 255) - 128; }
    uint64_t negate(uint64_t k) const { return 2 * origin - k; }
};

void check_range(const LaurentPoly& p, int max_power) {
    if (p.nvars() > 8)
        throw Error(ErrorKind::ResourceLimit, "constant-term engine handles at most 8 variables");
    for (int i = 0; i < p.nvars(); ++i)
        if (static_cast<long>(p.reach(i)) * max_power > 127)
            throw Error(ErrorKind::ResourceLimit, "exponent range exceeds the packed key width");
}

Integer to_integer(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(u >> 64), lo = static_cast<unsigned long>(u);
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}
inline Integer to_integer(const Integer& v) { return v; }

inline void addmul(__int128& acc, const __int128& a, long b) {
    __int128 t;
    if (__builtin_mul_overflow(a, static_cast<__int128>(b), &t) || __builtin_add_overflow(acc, t, &acc))
        throw Overflow{};
}
inline void addmul(Integer& acc, const Integer& a, long b) {
    if (b >= 0) mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    else mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-b));
}
inline bool is_zero(const __int128& v) { return v == 0; }
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }

template <class C>
class Engine {
public:
    using Map = absl::flat_hash_map<uint64_t, C>;

    Engine(const LaurentPoly& kernel, size_t budget) : pk_(kernel.nvars()), budget_(budget) {
        for (const auto& [e, c] : kernel.terms()) {
            if (!c.fits_slong_p()) throw Error(ErrorKind::UnsupportedTerm, "kernel coefficient too large");
            steps_.emplace_back(pk_.pack(e) - pk_.origin, c.get_si());
        }
        for (int i = 0; i < kernel.nvars(); ++i) reach_.push_back(kernel.reach(i));
    }

    Map identity() const {
        Map m;
        m[pk_.origin] = C(1);
        return m;
    }

    // p * kernel; if remaining >= 0, drop monomials that cannot get back to
    // the origin in `remaining` further steps.
    Map step(const Map& p, long remaining) const {
        Map out;
        out.reserve(p.size() * 2);
        for (const auto& [k, c] : p)
            for (const auto& [off, kc] : steps_) {
                uint64_t key = k + off;
                if (remaining >= 0 && !returnable(key, remaining)) continue;
                addmul(out[key], c, kc);
            }
        for (auto it = out.begin(); it != out.end();) {
            if (is_zero(it->second)) out.erase(it++);
            else ++it;
        }
        if (out.size() > budget_)
            throw Error(ErrorKind::ResourceLimit, "monomial budget of " + std::to_string(budget_) +
                                                      " exceeded (" + std::to_string(out.size()) + ")");
        return out;
    }

    Integer pair(const Map& a, const Map& b) const {
        Integer s;
        const Map& small = a.size() <= b.size() ? a : b;
        const Map& large = a.size() <= b.size() ? b : a;
        for (const auto& [k, c] : small) {
            auto it = large.find(pk_.negate(k));
            if (it != large.end()) s += to_integer(c) * to_integer(it->second);
        }
        return s;
    }

    Integer constant(const Map& p) const {
        auto it = p.find(pk_.origin);
        return it == p.end() ? Integer(0) : to_integer(it->second);
    }

private:
    bool returnable(uint64_t key, long remaining) const {
        for (int i = 0; i < pk_.nvars; ++i)
            if (std::abs(pk_.component(key, i)) > remaining * reach_[i]) return false;
        return true;
    }

    Packing pk_;
    size_t budget_;
    std::vector<std::pair<uint64_t, long>> steps_;
    std::vector<int> reach_;
};

template <class C>
Integer ct_power_impl(const LaurentPoly& kern, int n, bool prune, size_t budget) {
    Engine<C> eng(kern, budget);
    auto p = eng.identity();
    for (int s = 1; s <= n; ++s) p = eng.step(p, prune ? n - s : -1);
    return eng.constant(p);
}

template <class C>
std::vector<Integer> ct_powers_impl(const LaurentPoly& kern, int max_power, size_t budget) {
    Engine<C> eng(kern, budget);
    std::vector<Integer> out(static_cast<size_t>(max_power) + 1);
    int half = (max_power + 1) / 2;
    auto prev = eng.identity(), cur = prev;
    out[0] = 1;
    for (int k = 1; k <= half; ++k) {
        // the last power only pairs with powers up to max_power - k
        prev = std::move(cur);
        cur = eng.step(prev, k == half ? max_power - k : -1);
        if (2 * k - 1 <= max_power) out[2 * k - 1] = eng.pair(cur, prev);
        if (2 * k <= max_power) out[2 * k] = eng.pair(cur, cur);
    }
    return out;
}

template <class F>
auto with_fallback(F&& f) {
    try {
        return f(static_cast<__int128*>(nullptr));
    } catch (const Overflow&) {
        return f(static_cast<Integer*>(nullptr));
    }
}

std::vector<Integer> single_powers(const LaurentPoly& kern, int max_power, const CtLimits& lim) {
    if (max_power == 0) return {Integer(1)};
    check_range(kern, max_power);
    return with_fallback([&](auto* tag) {
        using C = std::remove_pointer_t<decltype(tag)>;
        return ct_powers_impl<C>(kern, max_power, lim.monomial_budget);
    });
}

}  // namespace

Integer ct_power(const KernelSpec& k, int n, bool prune, const CtLimits& lim) {
    if (n < 0) throw std::invalid_argument("negative power");
    if (n == 0) return 1;
    auto run = [&](const LaurentPoly& p) {
        check_range(p, n);
        return with_fallback([&](auto* tag) {
            using C = std::remove_pointer_t<decltype(tag)>;
            return ct_power_impl<C>(p, n, prune, lim.monomial_budget);
        });
    };
    if (!k.factors.empty()) {
        Integer r = 1;
        for (const auto& f : k.factors) r *= run(f);
        return r;
    }
    return run(k.kernel);
}

std::vector<Integer> ct_powers(const KernelSpec& k, int max_power, const CtLimits& lim) {
    if (max_power < 0) throw std::invalid_argument("negative power");
    if (!k.factors.empty()) {
        std::vector<Integer> r(static_cast<size_t>(max_power) + 1, Integer(1));
        for (const auto& f : k.factors) {
            auto v = single_powers(f, max_power, lim);
            for (int n = 0; n <= max_power; ++n) r[n] *= v[n];
        }
        return r;
    }
    return single_powers(k.kernel, max_power, lim);
}

CoeffTable ct_series(const KernelSpec& k, int N, const CtLimits& lim) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    bool even = k.lattice.parity == Parity::even_only;
    auto v = ct_powers(k, even ? 2 * N : N, lim);
    CoeffTable t{k.lattice, {}};
    for (int n = 0; n <= N; ++n) t.values.push_back(v[even ? 2 * n : n]);
    return t;
}

CoeffTable ct_series(Family f, int d, int N, const CtLimits& lim) {
    return ct_series(kernel(f, d), N, lim);
}

Report kernel_equivalence(const KernelSpec& a, const KernelSpec& b, int max_power) {
    if (a.steps_per_power != b.steps_per_power)
        return Report::fail(0, "kernels use different step conventions");
    auto va = ct_powers(a, max_power), vb = ct_powers(b, max_power);
    for (int n = 0; n <= max_power; ++n)
        if (va[n] != vb[n])
            return Report::fail(n, "CT(" + a.name + "^" + std::to_string(n) + ") = " + va[n].get_str() +
                                       " but CT(" + b.name + "^" + std::to_string(n) + ") = " + vb[n].get_str());
    return Report::pass("powers <= " + std::to_string(max_power));
}

}  // namespace lgf
