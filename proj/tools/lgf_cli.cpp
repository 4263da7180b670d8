// lgf: coefficient tables, ODE checks and numeric evaluations from the shell.
// Exit codes: 0 ok, 2 verification failure, 3 resource limit, 4 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgf/cache.hpp"
#include "lgf/closed_forms.hpp"
#include "lgf/constant_term.hpp"
#include "lgf/mahler.hpp"
#include "lgf/ode.hpp"
#include "lgf/ramanujan.hpp"

using json = nlohmann::ordered_json;
using namespace lgf;

namespace {

constexpr int kOk = 0, kVerify = 2, kResource = 3, kUsage = 4;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Usage("cannot read " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

json big(const BigFloat& x, unsigned digits) { return to_string(x, digits); }

json estimate(const Estimate& e, unsigned digits) {
    return {{"value", big(e.value, digits)}, {"error", big(e.error, 6)}};
}

json rationals(const std::vector<Rational>& v, size_t from = 0) {
    json a = json::array();
    for (size_t i = from; i < v.size(); ++i) a.push_back(to_string(v[i]));
    return a;
}

json series_json(const PowerSeries& s) { return rationals(s.coeffs()); }

json integers(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

// --- shared options -----------------------------------------------------------

struct Common {
    std::string family = "sc";
    int dim = 3;
    int terms = 0;
    std::string cache_dir;
    unsigned prec = 0;
    std::string format = "json";
    size_t ct_budget = CtLimits{}.monomial_budget;
};

unsigned digits_of(const Common& c) { return c.prec ? c.prec : default_digits(); }

LatticeSpec spec_of(const Common& c) { return make_spec(parse_family(c.family), c.dim); }

// Formula table with the cache in front of it.
CoeffTable formula_table(const LatticeSpec& spec, int N, const std::string& cache_dir, bool* hit = nullptr) {
    if (hit) *hit = false;
    if (!cache_dir.empty()) {
        if (auto t = cache_lookup(cache_dir, spec, N)) {
            if (hit) *hit = true;
            return *t;
        }
    }
    CoeffTable t = coeffs(spec, N);
    if (!cache_dir.empty()) cache_store(cache_dir, t);
    return t;
}

// --- coeffs ------------------------------------------------------------------

int cmd_coeffs(const Common& c, const std::string& method, json& out) {
    LatticeSpec spec = spec_of(c);
    int count = c.terms > 0 ? c.terms : 20;
    int N = count - 1;
    out["inputs"] = {{"family", family_name(spec.family)}, {"dim", spec.dim}, {"terms", count}, {"method", method}};
    std::vector<std::pair<std::string, std::vector<Integer>>> tables;
    json notes = json::array();
    auto run = [&](const std::string& m) {
        if (m == "formula") {
            tables.emplace_back(m, coeffs(spec, N).values);
        } else if (m == "ct") {
            tables.emplace_back(m, ct_series(spec.family, spec.dim, N, CtLimits{c.ct_budget}).values);
        } else if (m == "cosine") {
            if (spec.family != Family::sincos4 && spec.family != Family::triples4)
                throw Usage("--method cosine is available for sincos4 and triples4");
            tables.emplace_back(m, cosine_kernel_coeffs(spec.family, N).values);
        } else {
            throw Usage("unknown method '" + m + "'");
        }
    };
    if (method == "all") {
        for (const char* m : {"formula", "ct", "cosine"}) {
            try {
                run(m);
            } catch (const Usage&) {
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::UnsupportedLattice) throw;
                notes.push_back(std::string(m) + ": " + e.what());
            }
        }
        if (!c.cache_dir.empty()) {
            std::string p = cache_path(c.cache_dir, spec);
            if (std::filesystem::exists(p)) {
                CoeffTable t = read_cache(p);
                if (static_cast<int>(t.values.size()) >= count) {
                    t.values.resize(static_cast<size_t>(count));
                    tables.emplace_back("cache", t.values);
                }
            }
        }
        if (tables.empty()) throw Error(ErrorKind::UnsupportedLattice, "no method applies to " + spec_name(spec));
    } else if (method == "formula" && !c.cache_dir.empty()) {
        bool hit = false;
        tables.emplace_back("formula", formula_table(spec, N, c.cache_dir, &hit).values);
        out["cache"] = hit ? "hit" : "miss";
    } else {
        run(method);
    }
    const auto& ref = tables.front().second;
    bool pass = true;
    json methods = json::array();
    for (const auto& [m, v] : tables) {
        long first = -1;
        for (size_t i = 0; i < ref.size(); ++i)
            if (i >= v.size() || v[i] != ref[i]) {
                first = static_cast<long>(i);
                break;
            }
        json mj = {{"method", m}, {"agrees", first < 0}};
        if (first >= 0) {
            mj["first_mismatch"] = first;
            pass = false;
        }
        methods.push_back(mj);
    }
    if (!c.cache_dir.empty() && method != "formula") cache_store(c.cache_dir, CoeffTable{spec, ref});
    out["methods"] = methods;
    if (!notes.empty()) out["notes"] = notes;
    out["values"] = integers(ref);
    out["pass"] = pass;
    return pass ? kOk : kVerify;
}

// --- ode ---------------------------------------------------------------------

ThetaOperator load_operator(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        ThetaOperator op = parse_operator(slurp(ref));
        op.set_name(ref);
        return op;
    }
    return registry(ref);
}

// The series an operator is meant to annihilate: from --family/--dim when
// given, otherwise from the registry entry.
PowerSeries series_for(const std::string& ref, const Common& c, bool explicit_lattice, int N) {
    auto from = [&](const LatticeSpec& s) {
        auto t = formula_table(s, N, c.cache_dir);
        return PowerSeries::from_range(t.values.begin(), t.values.end());
    };
    if (explicit_lattice) return from(spec_of(c));
    if (ref == "bcc4") return from(make_spec(Family::bcc, 4));
    if (ref == "sc4") return from(make_spec(Family::sc, 4));
    if (ref == "diamond4") return from(make_spec(Family::diamond, 4));
    if (ref == "fcc4") return from(make_spec(Family::fcc, 4));
    if (ref == "sc3") return from(make_spec(Family::sc, 3));
    if (ref == "sc3x") {
        PowerSeries s = from(make_spec(Family::sc, 3));
        Rational p = 1;
        for (int n = 0; n <= N; ++n, p /= 36) s[n] *= p;
        return s;
    }
    if (ref.rfind("iwan", 0) == 0) {
        int d = std::stoi(ref.substr(4));
        return from(make_spec(Family::bcc, d));
    }
    throw Usage("no series known for '" + ref + "'; pass --family and --dim");
}

json operator_json(const ThetaOperator& op) {
    return {{"name", op.name()}, {"order", op.order()}, {"degree", op.degree()}, {"text", op.to_text()}};
}

int cmd_ode(const std::string& sub, const std::string& ref, const Common& c, bool explicit_lattice, int order,
            int degree, const std::string& out_file, bool fifth, json& out) {
    out["inputs"] = {{"subcommand", sub}, {"operator", ref}};
    if (sub == "fit") {
        int N = c.terms > 0 ? c.terms - 1 : (order + 1) * (degree + 1) + 10;
        PowerSeries f = series_for(ref, c, explicit_lattice, N);
        out["inputs"]["order"] = order;
        out["inputs"]["degree"] = degree;
        auto op = fit_ode(f, order, degree);
        out["pass"] = op.has_value();
        if (!op) return kVerify;
        if (!ref.empty() && !explicit_lattice) {
            try {
                out["matches_registry"] = op->equivalent(registry(ref));
            } catch (const Error&) {
            }
        }
        out["operator"] = operator_json(*op);
        if (!out_file.empty()) {
            std::ofstream os(out_file);
            os << op->to_text();
        }
        return kOk;
    }
    ThetaOperator op = load_operator(ref);
    out["operator"] = operator_json(op);
    if (sub == "verify") {
        int N = c.terms > 0 ? c.terms - 1 : 40;
        auto r = annihilates(op, series_for(ref, c, explicit_lattice, N));
        out["terms"] = N + 1;
        out["pass"] = r.ok;
        out["detail"] = r.detail;
        if (r.index >= 0) out["first_failure"] = r.index;
        return r.ok ? kOk : kVerify;
    }
    if (sub == "frobenius") {
        int N = c.terms > 0 ? c.terms : 10;
        auto fb = frobenius(op, N);
        json parts = json::array();
        for (const auto& a : fb.A) parts.push_back(series_json(a));
        out["A"] = parts;
        out["pass"] = true;
        return kOk;
    }
    if (sub == "yukawa") {
        int N = c.terms > 0 ? c.terms : 10;
        auto y = yukawa(op, N);
        out["q"] = series_json(y.q);
        out["K"] = rationals(y.K);
        out["N"] = rationals(y.N, 1);
        out["scale"] = y.scale.get_str();
        out["pass"] = true;
        return kOk;
    }
    if (sub == "cy-report") {
        int N = c.terms > 0 ? c.terms : 30;
        auto r = cy_conditions_report(op, N);
        out["conditions"] = {{"mum", r.mum},
                             {"wronskian", r.wronskian},
                             {"indicial_infinity", r.indicial_infinity},
                             {"integral_y0", r.integral_y0},
                             {"integral_q", r.integral_q},
                             {"bounded_instantons", r.bounded_instantons}};
        out["scale"] = r.scale.get_str();
        out["detail"] = r.detail;
        out["pass"] = r.all();
        return r.all() ? kOk : kVerify;
    }
    if (sub == "wronskian") {
        int N = c.terms > 0 ? c.terms : 25;
        auto r = wronskian_cy_check(op, N);
        out["w03_minus_w12"] = {{"zero", r.ok}, {"detail", r.detail}};
        bool pass = r.ok;
        if (fifth) {
            auto f = wronskian_fifth_order(op, std::max(N, 40));
            out["fifth_order"] = {{"operator", operator_json(f.op5)},
                                  {"annihilates_w0", f.annihilates_w0},
                                  {"annihilates_w1", f.annihilates_w1},
                                  {"wronskian_identity", f.wronskian_identity},
                                  {"p_relation", f.p_relation},
                                  {"recovered_proportional_to_y0", f.recovered_proportional},
                                  {"printed_form_proportional_to_y0", f.printed_form_proportional},
                                  {"detail", f.detail}};
            pass = pass && f.ok();
        }
        out["pass"] = pass;
        return pass ? kOk : kVerify;
    }
    if (sub == "symsq") {
        DOperator d = (ref == "sc3" || ref == "sc3x") ? sc3_dform() : to_dform(op);
        if (d.order() != 3) throw Usage("symsq needs a third-order operator");
        auto s = symmetric_square(d);
        out["variable"] = (ref == "sc3" || ref == "sc3x") ? "x = z^2" : "operator variable";
        out["P"] = s.P.to_string("x");
        out["Q"] = s.Q.to_string("x");
        out["residual"] = s.residual.to_string("x");
        out["pass"] = s.ok;
        return s.ok ? kOk : kVerify;
    }
    throw Usage("unknown ode subcommand '" + sub + "'");
}

// --- eval --------------------------------------------------------------------

struct EvalOpts {
    std::string z = "0.1";
    std::string tail = "none";
    std::string lattice = "sc";
    std::string id = "bcc-256";
    std::string kind = "sc";
    std::string kernel_file;
    std::string target = "fcc";
    std::string xi = "0.05";
    double tol = 0;  // > 0 turns on check mode
};

int cmd_eval(const std::string& sub, const Common& c, const EvalOpts& e, json& out) {
    unsigned D = digits_of(c);
    PrecisionScope ps(D + 10);
    out["inputs"] = {{"subcommand", sub}, {"prec", D}};
    auto check = [&](const BigFloat& err) {
        if (e.tol <= 0) return kOk;
        bool ok = err <= BigFloat(e.tol);
        out["tolerance"] = e.tol;
        out["pass"] = ok;
        return ok ? kOk : kVerify;
    };
    if (sub == "lgf") {
        LatticeSpec spec = spec_of(c);
        BigFloat z(e.z);
        out["inputs"]["family"] = family_name(spec.family);
        out["inputs"]["dim"] = spec.dim;
        out["inputs"]["z"] = e.z;
        out["inputs"]["tail"] = e.tail;
        Tail t = e.tail == "corrected" ? Tail::corrected : Tail::none;
        if (e.tail != "corrected" && e.tail != "none") throw Usage("--tail must be none or corrected");
        auto r = lgf_series_eval(spec, z, D, c.terms, t);
        out["result"] = estimate(r, D);
        return check(r.error);
    }
    if (sub == "closed") {
        ClosedFormId id = parse_closed_form(e.id);
        BigFloat z(e.z);
        out["inputs"]["id"] = e.id;
        out["inputs"]["z"] = e.z;
        BigFloat v = joyce_closed_form(id, z, D);
        auto s = lgf_series_eval(closed_form_lattice(id), z, D);
        out["value"] = big(v, D);
        out["series"] = estimate(s, D);
        if (uses_elliptic(id)) out["convention"] = convention_name(stored_convention(id));
        out["difference"] = big(abs(v - s.value), 6);
        return check(abs(v - s.value));
    }
    if (sub == "watson") {
        Family f = parse_family(e.lattice);
        out["inputs"]["lattice"] = e.lattice;
        auto g = watson_form(f);
        out["closed_form"] = g.to_string();
        out["value"] = big(watson(f, D), D);
        return kOk;
    }
    if (sub == "ramanujan") {
        int terms = c.terms > 0 ? c.terms : 200;
        out["inputs"]["id"] = e.id;
        if (e.id == "general") {
            auto g = ramanujan_general_form_check(D, terms);
            out["residual"] = big(abs(g.residual), 6);
            out["termwise_consistent"] = g.termwise_consistent;
            bool ok = abs(g.residual) < BigFloat("1e-20") && g.termwise_consistent;
            out["pass"] = ok;
            return ok ? kOk : kVerify;
        }
        auto r = ramanujan_eval(parse_ramanujan(e.id), terms, D);
        out["inputs"]["terms"] = terms;
        out["sum"] = big(r.sum, D);
        out["target"] = big(r.target, D);
        out["error"] = big(r.error, 6);
        return check(r.error);
    }
    if (sub == "bessel") {
        BigFloat z(e.z);
        out["inputs"]["kind"] = e.kind;
        out["inputs"]["dim"] = c.dim;
        out["inputs"]["z"] = e.z;
        Estimate v, s;
        if (e.kind == "sc") {
            v = bessel_sc(c.dim, z, D);
            s = lgf_series_eval(make_spec(Family::sc, c.dim), z, D);
        } else if (e.kind == "diamond") {
            v = bessel_diamond(c.dim, z, D);
            s = lgf_series_eval(make_spec(Family::diamond, c.dim), z * (c.dim + 1), D);
        } else if (e.kind == "connect") {
            v = bessel_connect_rhs(c.dim, z, std::min(D, 20u));
            s = bessel_sc(c.dim, z, D);
        } else if (e.kind == "forward") {
            v = abel_forward(c.dim, z, D);
            s = lgf_series_eval(make_spec(Family::sc, c.dim), z, D);
            auto coeff = abel_coefficient_identity(20);
            out["coefficient_identity"] = coeff.ok;
        } else {
            throw Usage("--kind must be sc, diamond, connect or forward");
        }
        out["integral"] = estimate(v, D);
        out["reference"] = estimate(s, D);
        out["difference"] = big(abs(v.value - s.value), 6);
        return check(abs(v.value - s.value));
    }
    if (sub == "mahler") {
        LaurentPoly F = e.kernel_file.empty() ? kernel(parse_family(c.family), c.dim).kernel
                                              : parse_kernel(slurp(e.kernel_file));
        auto m = log_mahler_measure(F);
        out["m"] = estimate(m.m, 15);
        out["M"] = big(m.M, 15);
        out["grid"] = m.grid;
        return kOk;
    }
    if (sub == "maps") {
        Family f = parse_family(e.target);
        BigFloat xi(e.xi);
        auto mv = honeycomb_map_eval(f, xi, D);
        LatticeSpec spec = make_spec(f, 3);
        auto s = mv.squared ? lgf_series_eval_sq(spec, mv.z, D) : lgf_series_eval(spec, mv.z, D);
        out["inputs"]["target"] = e.target;
        out["inputs"]["xi"] = e.xi;
        out[mv.squared ? "z2" : "z"] = big(mv.z, D);
        out["value"] = big(mv.value, D);
        out["series"] = estimate(s, D);
        out["difference"] = big(abs(mv.value - s.value), 6);
        return check(abs(mv.value - s.value));
    }
    if (sub == "return-prob") {
        LatticeSpec spec = spec_of(c);
        out["inputs"]["family"] = family_name(spec.family);
        out["inputs"]["dim"] = spec.dim;
        auto r = return_probability(spec, D);
        out["method"] = r.method;
        out["certain"] = r.certain;
        if (!r.certain) out["P_at_1"] = estimate({r.p_at_one, r.error}, D);
        out["probability"] = big(r.probability, D);
        return kOk;
    }
    throw Usage("unknown eval subcommand '" + sub + "'");
}

int exit_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::ResourceLimit: return kResource;
    case ErrorKind::ParseError:
    case ErrorKind::UnknownOperator:
    case ErrorKind::UnsupportedLattice:
    case ErrorKind::UnsupportedTerm:
    case ErrorKind::DomainError:
    case ErrorKind::DivergentRequest:
    case ErrorKind::InsufficientTerms: return kUsage;
    default: return kVerify;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice Green functions: coefficients, ODEs, evaluations"};
    app.require_subcommand(1);
    Common c;
    std::string method = "formula";
    bool csv_ok = false;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--family", c.family, "lattice family");
        s->add_option("--dim", c.dim, "dimension");
        s->add_option("--terms", c.terms, "number of terms");
        s->add_option("--cache-dir", c.cache_dir, "coefficient cache directory");
        s->add_option("--prec", c.prec, "working precision in decimal digits (default LGF_PREC or 128)");
        s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient tables");
    add_common(coeffs_cmd);
    coeffs_cmd->add_option("--method", method, "formula, ct, cosine or all")
        ->check(CLI::IsMember({"formula", "ct", "cosine", "all"}));
    coeffs_cmd->add_option("--ct-budget", c.ct_budget, "monomial budget for the constant-term engine");

    auto* ode_cmd = app.add_subcommand("ode", "differential operators");
    ode_cmd->require_subcommand(1);
    std::string op_ref;
    int order = 4, degree = 1;
    std::string out_file;
    bool fifth = false;
    for (const char* name : {"verify", "fit", "frobenius", "yukawa", "cy-report", "wronskian", "symsq"}) {
        auto* s = ode_cmd->add_subcommand(name);
        add_common(s);
        s->add_option("operator", op_ref, "registry name or operator file");
        if (std::string(name) == "fit") {
            s->add_option("--order", order);
            s->add_option("--degree", degree);
            s->add_option("--out", out_file, "write the fitted operator here");
        }
        if (std::string(name) == "wronskian") s->add_flag("--fifth", fifth, "also run the fifth-order construction");
    }

    auto* eval_cmd = app.add_subcommand("eval", "numeric evaluation");
    eval_cmd->require_subcommand(1);
    EvalOpts e;
    for (const char* name : {"lgf", "closed", "watson", "ramanujan", "bessel", "mahler", "maps", "return-prob"}) {
        auto* s = eval_cmd->add_subcommand(name);
        add_common(s);
        s->add_option("--z", e.z);
        s->add_option("--tail", e.tail);
        s->add_option("--lattice", e.lattice);
        s->add_option("--id", e.id);
        s->add_option("--kind", e.kind);
        s->add_option("--kernel", e.kernel_file);
        s->add_option("--target", e.target);
        s->add_option("--xi", e.xi);
        s->add_option("--check", e.tol, "fail with exit 2 if the error exceeds this");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& pe) {
        int rc = app.exit(pe);
        return rc == 0 ? 0 : kUsage;
    }

    json out;
    auto t0 = std::chrono::steady_clock::now();
    int rc = kOk;
    std::string command;
    try {
        if (coeffs_cmd->parsed()) {
            command = "coeffs";
            out["command"] = command;
            rc = cmd_coeffs(c, method, out);
            csv_ok = true;
        } else if (ode_cmd->parsed()) {
            auto* s = ode_cmd->get_subcommands().front();
            command = "ode " + s->get_name();
            out["command"] = command;
            bool explicit_lattice = s->count("--family") > 0;
            if (op_ref.empty() && !(s->get_name() == "fit" && explicit_lattice))
                throw Usage("an operator name or file is required");
            rc = cmd_ode(s->get_name(), op_ref, c, explicit_lattice, order, degree, out_file, fifth, out);
        } else {
            auto* s = eval_cmd->get_subcommands().front();
            command = "eval " + s->get_name();
            out["command"] = command;
            rc = cmd_eval(s->get_name(), c, e, out);
        }
    } catch (const Usage& u) {
        std::cerr << "usage error: " << u.what() << "\n";
        out["command"] = command;
        out["error"] = {{"kind", "UsageError"}, {"message", u.what()}};
        rc = kUsage;
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        out["error"] = {{"kind", kind_name(err.kind())}, {"message", err.what()}};
        rc = exit_for(err);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        out["error"] = {{"kind", "UsageError"}, {"message", ex.what()}};
        rc = kUsage;
    }
    out["exit_code"] = rc;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out["timings"] = {{"wall_ms", std::round(ms * 1000) / 1000}};

    if (c.format == "csv" && csv_ok && out.contains("values")) {
        std::cout << "n,a_n\n";
        size_t i = 0;
        for (const auto& v : out["values"]) std::cout << i++ << ',' << v.get<std::string>() << '\n';
    } else {
        std::cout << out.dump(2) << '\n';
    }
    return rc;
}
