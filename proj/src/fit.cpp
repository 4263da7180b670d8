#include "lgf/ode.hpp"

namespace lgf {

namespace {

using Row = std::vector<Integer>;

// Basis of the rational nullspace of an integer matrix (fraction-free
// elimination, then back substitution in Q).
std::vector<std::vector<Rational>> nullspace(std::vector<Row> M, int cols) {
    int rows = static_cast<int>(M.size());
    std::vector<int> pivot_col;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(M[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
            int c = pivot_col[i];
            Rational s;
            for (int j = c + 1; j < cols; ++j)
                if (sgn(v[j]) != 0 && sgn(M[i][j]) != 0) s += Rational(M[i][j]) * v[j];
            v[c] = -s / Rational(M[i][c]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::optional<ThetaOperator> fit_ode(const PowerSeries& f, int r, int k, int guard) {
    if (r < 1 || k < 0) throw std::invalid_argument("fit_ode: need r >= 1, k >= 0");
    int cols = (r + 1) * (k + 1);
    int rows = f.order() + 1;
    if (rows < cols + guard)
        throw Error(ErrorKind::InsufficientTerms, "order " + std::to_string(r) + ", degree " +
                                                      std::to_string(k) + " needs " +
                                                      std::to_string(cols + guard) + " coefficients, have " +
                                                      std::to_string(rows));
    std::vector<Row> M;
    for (int n = 0; n < rows; ++n) {
        std::vector<Rational> q(static_cast<size_t>(cols));
        for (int l = 0; l <= k && l <= n; ++l) {
            Rational base = f[n - l], pw = 1;
            for (int j = 0; j <= r; ++j) {
                q[l * (r + 1) + j] = base * pw;
                pw *= n - l;
            }
        }
        Integer den = 1;
        for (const auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        Row row;
        for (const auto& v : q) row.push_back(Rational(v * den).get_num());
        M.push_back(std::move(row));
    }
    auto ns = nullspace(std::move(M), cols);
    if (ns.empty()) return std::nullopt;
    if (ns.size() > 1) {
        if (k == 0) return std::nullopt;
        return fit_ode(f, r, k - 1, guard);
    }
    std::vector<QPoly> ps;
    for (int l = 0; l <= k; ++l)
        ps.emplace_back(std::vector<Rational>(ns[0].begin() + l * (r + 1), ns[0].begin() + (l + 1) * (r + 1)));
    ThetaOperator op(std::move(ps), "fitted");
    op = op.normalized();
    if (!annihilates(op, f).ok) return std::nullopt;
    return op;
}

std::optional<ThetaOperator> fit_min_degree(const PowerSeries& f, int r, int kmax, int guard) {
    for (int k = 1; k <= kmax; ++k) {
        if (f.order() + 1 < (r + 1) * (k + 1) + guard) break;
        if (auto op = fit_ode(f, r, k, guard)) return op;
    }
    return std::nullopt;
}

}  // namespace lgf
