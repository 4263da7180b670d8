// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lgf/cache.hpp"
#include "lgf/closed_forms.hpp"
#include "lgf/constant_term.hpp"
#include "lgf/ode.hpp"
#include "lgf/ramanujan.hpp"

using namespace lgf;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "[exception: " << e.what() << "] ";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s %d %s (%.1fs) %s\n", o.ok ? "PASS" : "FAIL", n, name.c_str(), s, o.detail.str().c_str());
    std::fflush(stdout);
}

PowerSeries as_series(const std::vector<Integer>& v) { return PowerSeries::from_range(v.begin(), v.end()); }

PowerSeries lattice_series(Family f, int d, int N) { return as_series(coeffs(make_spec(f, d), N).values); }

std::string sci(const BigFloat& x) { return to_string(x, 3); }

// --- CLI helpers ---------------------------------------------------------------

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    std::string cmd = std::string(LGF_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r{0, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string strip_timings(const std::string& s) {
    std::istringstream is(s);
    std::ostringstream os;
    std::string line;
    bool skip = false;
    while (std::getline(is, line)) {
        if (line.find("\"timings\"") != std::string::npos) skip = true;
        if (!skip) os << line << '\n';
        if (skip && line.find('}') != std::string::npos) skip = false;
    }
    return os.str();
}

}  // namespace

int main() {
    criterion(1, "coefficient cross-validation", [](Outcome& o) {
        struct L {
            Family f;
            int d;
        };
        const L list[] = {{Family::honeycomb, 2}, {Family::square, 2},  {Family::triangular, 2},
                          {Family::diamond, 3},   {Family::sc, 3},      {Family::bcc, 3},
                          {Family::fcc, 3},       {Family::diamond, 4}, {Family::sc, 4},
                          {Family::bcc, 4},       {Family::fcc, 4},     {Family::sc, 5},
                          {Family::bcc, 5},       {Family::diamond, 5}};
        for (const auto& l : list) {
            auto spec = make_spec(l.f, l.d);
            bool eq = coeffs(spec, 20).values == ct_series(l.f, l.d, 20).values;
            o.require(eq, spec_name(spec));
        }
        auto fcc5 = ct_series(Family::fcc, 5, 10);
        o.require(fcc5.values.size() == 11 && fcc5.values[2] == 40, "fcc-5 a_2 = 40");
        bool gap = false;
        try {
            coeffs(make_spec(Family::fcc, 5), 10);
        } catch (const Error& e) {
            gap = e.kind() == ErrorKind::UnsupportedLattice;
        }
        o.require(gap, "fcc-5 formula reports UnsupportedLattice");
        o.detail << "14 lattices n<=20; fcc-5 CT a_2 = " << fcc5.values[2].get_str();
    });

    criterion(2, "ODE annihilation", [](Outcome& o) {
        const std::pair<const char*, std::pair<Family, int>> ops[] = {{"bcc4", {Family::bcc, 4}},
                                                                       {"sc4", {Family::sc, 4}},
                                                                       {"diamond4", {Family::diamond, 4}},
                                                                       {"fcc4", {Family::fcc, 4}}};
        for (const auto& [name, fd] : ops) {
            auto r = annihilates(registry(name), lattice_series(fd.first, fd.second, 39));
            o.require(r.ok, std::string(name) + " " + r.detail);
        }
        for (int d = 3; d <= 6; ++d) {
            std::vector<Integer> c;
            for (int n = 0; n < 40; ++n) {
                Integer b = binomial(2 * n, n), p = 1;
                for (int i = 0; i < d; ++i) p *= b;
                c.push_back(p);
            }
            auto r = annihilates(registry("iwan" + std::to_string(d)), as_series(c));
            o.require(r.ok, "iwan" + std::to_string(d));
        }
        o.detail << "4 registry operators + iwan3..6 through 40 terms";
    });

    criterion(3, "ODE recovery", [](Outcome& o) {
        struct Case {
            const char* name;
            Family f;
            int r, k;
        };
        const Case cases[] = {{"bcc4", Family::bcc, 4, 1},
                              {"sc4", Family::sc, 4, 2},
                              {"diamond4", Family::diamond, 4, 3},
                              {"fcc4", Family::fcc, 4, 7}};
        for (const auto& c : cases) {
            auto f = lattice_series(c.f, 4, 70);
            auto op = fit_ode(f, c.r, c.k);
            o.require(op && op->equivalent(registry(c.name)),
                      std::string(c.name) + " r" + std::to_string(c.r) + "k" + std::to_string(c.k));
        }
        auto f5 = lattice_series(Family::sc, 5, 60);
        auto op5 = fit_ode(f5, 5, 3);
        o.require(op5.has_value() && op5->order() == 5, "sc-5 r5k3 exists");
        if (op5) o.require(annihilates(*op5, f5).ok, "sc-5 operator annihilates 61 terms");
        if (op5) o.detail << "sc-5: order " << op5->order() << " degree " << op5->degree();
    });

    criterion(4, "Yukawa couplings and instantons", [](Outcome& o) {
        auto y = yukawa(registry("sc4"), 8);
        const long K[] = {1, 4, 164, 5800, 196772};
        for (int i = 0; i < 5; ++i) o.require(y.K[i] == K[i], "sc4 K_" + std::to_string(i));
        const long N3[] = {12, 60, 644, 9216, 157536, 3083604};
        for (int k = 1; k <= 6; ++k) o.require(3 * y.N[k] == N3[k - 1], "sc4 3N_" + std::to_string(k));
        auto f = yukawa(registry("fcc4"), 8);
        const long Nf[] = {3, -4, 64, -253, 4292, -25608};
        for (int k = 1; k <= 6; ++k) o.require(f.N[k] == Nf[k - 1], "fcc4 N_" + std::to_string(k));
        // Lambert numerators n_k = k^3 N_k are divisible by k^2.
        auto g = yukawa(registry("diamond4"), 12);
        for (int k = 1; k <= 10; ++k) {
            Rational kn = k * g.N[k];
            o.require(kn.get_den() == 1, "diamond4 k^2 | n_k at k=" + std::to_string(k));
        }
        o.detail << "sc4 K, 3N_k; fcc4 N_k in its own variable; diamond4 n_k/k^2 = k N_k integral, k<=10";
    });

    criterion(5, "Calabi-Yau properties", [](Outcome& o) {
        for (const char* name : {"bcc4", "sc4", "diamond4", "fcc4"}) {
            auto r = wronskian_cy_check(registry(name), 25);
            o.require(r.ok, std::string(name) + " w03 - w12");
        }
        auto ind = indicial(registry("bcc4"));
        bool halves = ind.at_infinity.size() == 4 && ind.irrational_at_infinity == 0;
        for (const auto& r : ind.at_infinity) halves = halves && r == Rational(1, 2);
        o.require(halves, "bcc4 exponents at infinity all 1/2");
        o.require(ind.condition_three, "condition three");
        o.detail << "w03 = w12 through order 25; non-MUM triples check lives in the stretch target";
    });

    criterion(6, "symmetric square and fifth-order Wronskian", [](Outcome& o) {
        auto s = symmetric_square_check(sc3_dform());
        RatFunc Q(QPoly{-12, 3}, QPoly{0, 144, -160, 16});
        o.require(s.ok && s.Q == Q, "sc3 Q = 3(x-4)/(16x(x-1)(x-9)), got " + s.Q.to_string());
        struct L {
            const char* name;
            Family f;
        };
        for (const auto& l : {L{"diamond3", Family::diamond}, L{"bcc3", Family::bcc}, L{"fcc3", Family::fcc}}) {
            auto op = fit_min_degree(lattice_series(l.f, 3, 60), 3, 6);
            o.require(op.has_value(), std::string(l.name) + " third-order fit");
            if (!op) continue;
            auto r = symmetric_square(to_dform(*op));
            o.require(r.ok, std::string(l.name) + " symmetric square");
            o.detail << l.name << " r3k" << op->degree() << "; ";
        }
        auto f = wronskian_fifth_order(registry("bcc4"), 40);
        o.require(f.ok(), "bcc4 fifth-order chain: " + f.detail);
        o.require(f.recovered_proportional && f.recovered.order() >= 20, "recovered y ~ y0 to order 20");
        o.detail << "fifth-order op degree " << f.op5.degree() << ", y ~ y0 through order " << f.recovered.order();
    });

    criterion(7, "Watson constants", [](Outcome& o) {
        struct W {
            Family f;
            const char* printed;
            int decimals;
        };
        const W list[] = {{Family::diamond, "1.79288", 5},
                          {Family::sc, "1.516386", 6},
                          {Family::bcc, "1.3932039", 7},
                          {Family::fcc, "1.344661", 6}};
        PrecisionScope ps(50);
        for (const auto& w : list) {
            BigFloat v = watson(w.f, 40);
            BigFloat half = BigFloat(5) * pow(BigFloat(10), -(w.decimals + 1));
            o.require(abs(v - BigFloat(w.printed)) < half, std::string(family_name(w.f)) + " " + w.printed);
            o.detail << family_name(w.f) << " " << to_string(v, 10) << "; ";
        }
        auto r = rational_ratio(watson_form(Family::diamond), watson_form(Family::fcc));
        o.require(r && *r == Rational(4, 3), "diamond/fcc = 4/3");
        auto b = bessel_sc(3, BigFloat(1), 30);
        BigFloat diff = abs(b.value - watson(Family::sc, 30));
        o.require(diff < BigFloat("1e-5"), "Bessel sc vs Watson");
        o.detail << "Bessel diff " << sci(diff);
    });

    criterion(8, "hyper-bcc d=4 at z=1", [](Outcome& o) {
        PrecisionScope ps(60);
        BigFloat printed("1.1186363871641870683496192575256409167948575515294");
        auto r = lgf_series_eval(make_spec(Family::bcc, 4), BigFloat(1), 50, 0, Tail::corrected);
        BigFloat diff = abs(r.value - printed);
        o.require(diff < BigFloat("5e-11"), "10 leading digits");
        o.require(r.error < BigFloat("5e-11"), "error bound below 10 digits");
        o.require(diff <= r.error + BigFloat("1e-49"), "within reported error");
        o.detail << to_string(r.value, 20) << " err " << sci(r.error) << " diff " << sci(diff);
    });

    criterion(9, "Ramanujan series", [](Outcome& o) {
        BigFloat worst = 0;
        for (auto id : all_ramanujan()) {
            auto r = ramanujan_eval(id, 200, 60);
            o.require(r.error < BigFloat("1e-15"), ramanujan_name(id));
            if (r.error > worst) worst = r.error;
        }
        auto g = ramanujan_general_form_check(64);
        o.require(abs(g.residual) < BigFloat("1e-20"), "general form residual");
        o.require(g.termwise_consistent, "termwise consistency");
        o.detail << "worst error " << sci(worst) << ", general residual " << sci(abs(g.residual));
    });

    criterion(10, "closed forms vs series", [](Outcome& o) {
        const unsigned D = 40;
        PrecisionScope ps(D + 10);
        for (auto id : all_closed_forms()) {
            std::string name = closed_form_name(id);
            if (name.rfind("map-", 0) == 0) continue;
            if (uses_elliptic(id)) {
                auto res = resolve_convention(id);
                o.require(res.unique() && res.matching.front() == stored_convention(id), name + " convention");
                o.detail << name << ":" << convention_name(stored_convention(id)) << " ";
            }
            for (const char* zs : {"0.1", "0.2"}) {
                BigFloat z(zs);
                BigFloat v = joyce_closed_form(id, z, D);
                auto s = lgf_series_eval(closed_form_lattice(id), z, D);
                BigFloat tol(id == ClosedFormId::fourd_sc ? "1e-10" : "1e-12");
                o.require(abs(v - s.value) < tol, name + " z=" + zs);
            }
        }
        for (Family f : {Family::fcc, Family::sc, Family::bcc, Family::diamond}) {
            for (const char* xs : {"0.05", "0.08"}) {
                auto mv = honeycomb_map_eval(f, BigFloat(xs), D);
                auto spec = make_spec(f, 3);
                auto s = mv.squared ? lgf_series_eval_sq(spec, mv.z, D) : lgf_series_eval(spec, mv.z, D);
                o.require(abs(mv.value - s.value) < BigFloat("1e-10"),
                          std::string("map ") + family_name(f) + " xi=" + xs);
            }
        }
    });

    criterion(11, "exact relations", [](Outcome& o) {
        o.require(relation_triangular_from_honeycomb(30).ok, "triangular from honeycomb");
        o.require(relation_fcc_from_diamond(30).ok, "fcc from diamond");
        for (int d = 2; d <= 5; ++d)
            o.require(relation_hypercubic_from_hyperdiamond(d, 20).ok, "hypercubic d=" + std::to_string(d));
        o.require(cosine_kernel_coeffs(Family::sincos4, 10).values == coeffs(make_spec(Family::sc, 4), 10).values,
                  "sin/cos kernel = 4d hypercubic");
    });

    criterion(12, "Bessel and Abel identities", [](Outcome& o) {
        const unsigned D = 30;
        PrecisionScope ps(D + 10);
        BigFloat tol("1e-8");
        auto check = [&](const std::string& what, const BigFloat& a, const BigFloat& b) {
            BigFloat d = abs(a - b);
            o.require(d < tol, what);
            o.detail << what << " " << sci(d) << "; ";
        };
        BigFloat z4("0.4"), z1("0.1"), z3("0.3");
        auto sc3 = lgf_series_eval(make_spec(Family::sc, 3), z4, D).value;
        check("besssc", bessel_sc(3, z4, D).value, sc3);
        check("bessd", bessel_diamond(3, z1, D).value,
              lgf_series_eval(make_spec(Family::diamond, 3), z1 * 4, D).value);
        check("connect", bessel_connect_rhs(3, z4, 20).value, sc3);
        check("forward d=3", abel_forward(3, z3, D).value, lgf_series_eval(make_spec(Family::sc, 3), z3, D).value);
        check("forward d=4", abel_forward(4, z3, D).value, lgf_series_eval(make_spec(Family::sc, 4), z3, D).value);
        o.require(abel_coefficient_identity(20).ok, "coefficient identity n<=20");
    });

    criterion(13, "Apery-type triple operators", [](Outcome& o) {
        struct T {
            int order;
            long a, b, c;
        };
        for (const auto& t : {T{2, 11, 3, -1}, T{3, 17, 5, 1}}) {
            auto op = triple_operator(t.order, t.a, t.b, t.c);
            auto fb = frobenius(op, 50);
            const auto& y0 = fb.A[0];
            std::string tag = "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
            o.require(y0[1] == t.b, tag + " a_1");
            o.require(is_integral(y0, 50), tag + " y0 integral to 50");
            PowerSeries A0 = y0.truncated(30), A1 = fb.A[1].truncated(30);
            PowerSeries q = (A1 / A0).exp().shifted(1).truncated(30);
            o.require(is_integral(q, 30), tag + " q integral to 30");
            o.detail << tag << " a_1=" << to_string(y0[1]) << " q_2=" << to_string(q[2]) << "; ";
        }
    });

    criterion(14, "CLI and persistence", [](Outcome& o) {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / ("lgf-accept-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto t = coeffs(make_spec(Family::fcc, 3), 40);
        std::string path = cache_path(dir.string(), t.spec);
        write_cache(path, t);
        auto back = read_cache(path);
        std::ifstream is(path);
        std::stringstream raw;
        raw << is.rdbuf();
        o.require(back.values == t.values && raw.str() == cache_to_text(t), "cache round trip");

        auto a = run_cli("coeffs --family bcc --dim 3 --terms 3");
        o.require(a.code == 0 && a.out.find("\"216\"") != std::string::npos, "bcc-3 table 1, 8, 216");
        auto b = run_cli("coeffs --family bcc --dim 3 --terms 3");
        o.require(strip_timings(a.out) == strip_timings(b.out), "deterministic reports");
        auto e1 = run_cli("eval lgf --family bcc --dim 4 --z 1 --tail corrected --prec 30");
        auto e2 = run_cli("eval lgf --family bcc --dim 4 --z 1 --tail corrected --prec 30");
        o.require(e1.code == 0 && strip_timings(e1.out) == strip_timings(e2.out), "deterministic eval");

        o.require(run_cli("coeffs --family square --dim 2 --terms 20 --method all").code == 0, "exit 0");
        o.require(run_cli("ode verify bcc4 --terms 40").code == 0, "ode verify exit 0");
        o.require(run_cli("coeffs --family fcc --dim 5 --method formula").code == 4, "UnsupportedLattice exit 4");
        o.require(run_cli("coeffs --bogus").code == 4, "bad flag exit 4");
        o.require(run_cli("eval lgf --family square --dim 2 --z 1").code == 4, "divergent request exit 4");
        o.require(run_cli("coeffs --family sc --dim 4 --terms 20 --method ct --ct-budget 100").code == 3,
                  "resource limit exit 3");
        o.require(run_cli("eval ramanujan --id bcc-256 --terms 42 --prec 40 --check 1e-25").code == 0,
                  "check mode pass");
        o.require(run_cli("eval ramanujan --id bcc-256 --terms 5 --prec 40 --check 1e-25").code == 2,
                  "check mode breach exit 2");

        std::string cdir = (dir / "cache").string();
        auto miss = run_cli("coeffs --family sc --dim 3 --terms 15 --cache-dir " + cdir);
        auto hit = run_cli("coeffs --family sc --dim 3 --terms 15 --cache-dir " + cdir);
        o.require(miss.out.find("\"miss\"") != std::string::npos && hit.out.find("\"hit\"") != std::string::npos,
                  "cache miss then hit");
        auto values = [](const std::string& s) { return s.substr(s.find("\"values\"")); };
        o.require(values(strip_timings(miss.out)) == values(strip_timings(hit.out)), "hit and miss tables agree");
        o.require(run_cli("coeffs --family sc --dim 3 --terms 15 --method all --cache-dir " + cdir).code == 0,
                  "clean cache cross-validates");
        // corrupt one entry
        std::string cp = cache_path(cdir, make_spec(Family::sc, 3));
        auto ct = read_cache(cp);
        ct.values[7] += 1;
        write_cache(cp, ct);
        o.require(run_cli("coeffs --family sc --dim 3 --terms 15 --method all --cache-dir " + cdir).code == 2,
                  "corrupted cache exit 2");
        fs::remove_all(dir);
    });

    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
