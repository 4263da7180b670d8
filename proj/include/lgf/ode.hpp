#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgf/qpoly.hpp"
#include "lgf/series.hpp"

namespace lgf {

// sum_l x^l P_l(theta), theta = x d/dx.
class ThetaOperator {
public:
    ThetaOperator() = default;
    explicit ThetaOperator(std::vector<QPoly> polys, std::string name = {}, std::string note = {});

    int order() const;
    int degree() const { return static_cast<int>(P_.size()) - 1; }
    const QPoly& P(int l) const { return P_[l]; }
    QPoly P_or_zero(int l) const { return l >= 0 && l <= degree() ? P_[l] : QPoly(); }
    const std::vector<QPoly>& polys() const { return P_; }
    Rational coeff(int l, int j) const { return P_or_zero(l).coeff(j); }

    const std::string& name() const { return name_; }
    const std::string& note() const { return note_; }
    void set_name(std::string n) { name_ = std::move(n); }
    void set_note(std::string n) { note_ = std::move(n); }

    // Integer coefficients with unit content, P_0 leading coefficient positive.
    ThetaOperator normalized() const;
    bool equivalent(const ThetaOperator& o) const { return normalized().P_ == o.normalized().P_; }

    // x -> s x
    ThetaOperator rescaled(const Rational& s) const;

    std::string to_text() const;  // "l : c_0 c_1 ... c_r" per line
    std::string to_string() const;

private:
    std::vector<QPoly> P_;
    std::string name_, note_;
};

ThetaOperator parse_operator(const std::string& text);  // throws ParseError

// Known operators: bcc4, sc4, diamond4, fcc4, sc3, sc3x, iwan<d> (d >= 1).
ThetaOperator registry(const std::string& name);
std::vector<std::string> registry_names();

// Operator in d/dx form: sum_i a_i(x) D^i.
struct DOperator {
    std::vector<QPoly> a;
    int order() const { return static_cast<int>(a.size()) - 1; }
};
DOperator sc3_dform();
DOperator to_dform(const ThetaOperator& op);
ThetaOperator to_theta(const DOperator& op);  // multiplied by the least power of x needed

PowerSeries apply(const ThetaOperator& op, const PowerSeries& f);
LogSeries apply(const ThetaOperator& op, const LogSeries& f);
Report annihilates(const ThetaOperator& op, const PowerSeries& f);

// Exact nullspace fit. Needs at least (r+1)(k+1) + guard coefficients.
std::optional<ThetaOperator> fit_ode(const PowerSeries& f, int r, int k, int guard = 5);
// Smallest degree in [1, kmax] that admits an order-r annihilator.
std::optional<ThetaOperator> fit_min_degree(const PowerSeries& f, int r, int kmax, int guard = 5);

struct IndicialReport {
    std::vector<Rational> at_zero;
    int irrational_at_zero = 0;
    std::vector<Rational> at_infinity;
    int irrational_at_infinity = 0;
    bool mum = false;
    bool condition_three = false;  // positive, lambda1 + lambda4 = lambda2 + lambda3
};
IndicialReport indicial(const ThetaOperator& op);

bool is_mum(const ThetaOperator& op);

// y_j = sum_i log^i/i! A_{j-i}, A_0 = y_0; A_j(0) = 0 for j > 0.
struct FrobeniusBasis {
    std::vector<PowerSeries> A;
    std::vector<LogSeries> y;
    int order = 0;
};
FrobeniusBasis frobenius(const ThetaOperator& op, int N);  // throws NotMUM

struct YukawaData {
    PowerSeries q;       // q(z) = z exp(A_1/A_0)
    PowerSeries z_of_q;  // inverse
    std::vector<Rational> K;  // K_0 = 1, K_1, ...
    std::vector<Rational> N;  // N[k] for k >= 1, N[0] unused
    Integer scale;            // lcm of the denominators of N_k
};
YukawaData yukawa(const ThetaOperator& op, int N);
// K_m = sum_{k | m} k^3 N_k
std::vector<Rational> lambert_from_instantons(const std::vector<Rational>& N, int depth);

struct CyConditions {
    bool mum = false;
    bool wronskian = false;
    bool indicial_infinity = false;
    bool integral_y0 = false;
    bool integral_q = false;
    bool bounded_instantons = false;
    Integer scale;
    std::string detail;
    bool all() const {
        return mum && wronskian && indicial_infinity && integral_y0 && integral_q && bounded_instantons;
    }
};
CyConditions cy_conditions_report(const ThetaOperator& op, int N);

Report wronskian_cy_check(const ThetaOperator& op, int N);

struct FifthOrderResult {
    ThetaOperator op5;
    bool annihilates_w0 = false;
    bool annihilates_w1 = false;
    bool w0_log_free = false;
    bool wronskian_identity = false;  // W(w0,w1) = x^2 y0^2 exp(-1/2 int P)
    bool p_relation = false;          // P = 2/x + (2/5) P5
    bool recovered_proportional = false;
    bool printed_form_proportional = false;
    PowerSeries recovered;  // normalized to constant term 1
    std::string detail;
    bool ok() const {
        return annihilates_w0 && annihilates_w1 && w0_log_free && wronskian_identity && p_relation &&
               recovered_proportional;
    }
};
FifthOrderResult wronskian_fifth_order(const ThetaOperator& op4, int N, int kmax = 8);

struct SymmetricSquare {
    RatFunc P, Q;
    RatFunc residual;
    bool ok = false;
};
SymmetricSquare symmetric_square(const DOperator& op3);
SymmetricSquare symmetric_square_check(const DOperator& op3);  // throws NotSymmetricSquare

// theta^2 - x(a theta^2 + a theta + b) + c x^2 (theta+1)^2, or
// theta^3 - x(2theta+1)(a theta^2 + a theta + b) + c x^2 (theta+1)^3
ThetaOperator triple_operator(int order, const Rational& a, const Rational& b, const Rational& c);

// f(x/(1 - a x)) / (1 - a x)
PowerSeries moebius_pullback(const PowerSeries& f, const Rational& a);

bool is_integral(const PowerSeries& f, int upto);

}  // namespace lgf
