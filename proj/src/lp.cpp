#include "iart/lp.hpp"

namespace iart {

namespace {

enum class DualOutcome { Optimal, Infeasible, Unbounded };

struct Tableau {
    int rows = 0, cols = 0;  // cols excludes the rhs
    QMat t;                  // rows + 1 lines, last line is the objective (reduced costs, -value)
    std::vector<int> basis;

    void pivot(int r, int c) {
        Q inv = 1 / t[r][c];
        for (auto& x : t[r]) x *= inv;
        for (int i = 0; i <= rows; ++i) {
            if (i == r || sgn(t[i][c]) == 0) continue;
            Q f = t[i][c];
            for (int j = 0; j <= cols; ++j)
                if (sgn(t[r][j])) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Minimizes the objective line over columns < limit; false if unbounded.
    bool run(int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (sgn(t[rows][j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Q best;
            for (int i = 0; i < rows; ++i) {
                if (sgn(t[i][enter]) <= 0) continue;
                Q ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

// max b.y  s.t.  A^T y = c,  y >= 0.  On success also returns the primal point
// x_i = s_i * (reduced cost of artificial i), s_i the sign used to make c_i >= 0.
DualOutcome solve_dual(const QMat& A, const QVec& b, const QVec& c, QVec& y, QVec& x, Q& value) {
    int m = int(A.size());
    int k = int(c.size());
    Tableau tb;
    tb.rows = k;
    tb.cols = m + k;
    tb.t.assign(k + 1, QVec(m + k + 1, Q(0)));
    tb.basis.assign(k, 0);
    std::vector<int> sign(k, 1);
    for (int i = 0; i < k; ++i) {
        sign[i] = sgn(c[i]) < 0 ? -1 : 1;
        for (int j = 0; j < m; ++j) tb.t[i][j] = sign[i] * A[j][i];
        tb.t[i][m + i] = 1;
        tb.t[i][m + k] = sign[i] * c[i];
        tb.basis[i] = m + i;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) tb.t[k][j] -= tb.t[i][j];
    for (int i = 0; i < k; ++i) tb.t[k][m + k] -= tb.t[i][m + k];
    tb.run(m);
    if (sgn(tb.t[k][m + k]) != 0) return DualOutcome::Infeasible;
    // Drive artificials out of the basis; rows that cannot be pivoted are redundant
    // and keep an artificial basic at value zero.
    for (int i = 0; i < k; ++i) {
        if (tb.basis[i] < m) continue;
        for (int j = 0; j < m; ++j)
            if (sgn(tb.t[i][j])) {
                tb.pivot(i, j);
                break;
            }
    }
    // Phase 2: minimize -b.y with the artificial columns kept for the dual prices.
    std::fill(tb.t[k].begin(), tb.t[k].end(), Q(0));
    for (int j = 0; j < m; ++j) tb.t[k][j] = -b[j];
    for (int i = 0; i < k; ++i) {
        int bj = tb.basis[i];
        if (bj >= m || sgn(b[bj]) == 0) continue;
        Q cb = -b[bj];
        for (int j = 0; j <= tb.cols; ++j)
            if (sgn(tb.t[i][j])) tb.t[k][j] -= cb * tb.t[i][j];
    }
    if (!tb.run(m)) return DualOutcome::Unbounded;
    y.assign(m, Q(0));
    for (int i = 0; i < k; ++i)
        if (tb.basis[i] < m) y[tb.basis[i]] = tb.t[i][tb.cols];
    value = 0;
    for (int j = 0; j < m; ++j) value += b[j] * y[j];
    x.assign(k, Q(0));
    for (int i = 0; i < k; ++i) x[i] = sign[i] * tb.t[k][m + i];
    return DualOutcome::Optimal;
}

bool certified(const QMat& A, const QVec& b, const QVec& c, const QVec& y, const QVec& x, const Q& value) {
    int k = int(c.size());
    for (size_t j = 0; j < A.size(); ++j) {
        if (sgn(y[j]) < 0) return false;
        Q s = 0;
        for (int i = 0; i < k; ++i) s += A[j][i] * x[i];
        if (s < b[j]) return false;
    }
    for (int i = 0; i < k; ++i) {
        Q s = 0;
        for (size_t j = 0; j < A.size(); ++j) s += A[j][i] * y[j];
        if (s != c[i]) return false;
    }
    Q cx = 0;
    for (int i = 0; i < k; ++i) cx += c[i] * x[i];
    return cx == value;
}

LPResult finish(const QMat& A, const QVec& b, const QVec& c, QVec y, QVec x, Q value) {
    require(certified(A, b, c, y, x, value), "LP certificate check failed");
    LPResult r;
    r.status = LPStatus::Optimal;
    r.value = value;
    r.y = std::move(y);
    r.x = std::move(x);
    return r;
}

}  // namespace

bool lp_feasible(const QMat& A, const QVec& b) {
    if (A.empty()) return true;
    int k = int(A[0].size());
    QVec y, x;
    Q v;
    // Primal min 0 s.t. Ax >= b is feasible iff the dual (max b.y, A^T y = 0, y >= 0) is bounded.
    return solve_dual(A, b, QVec(k, Q(0)), y, x, v) != DualOutcome::Unbounded;
}

LPResult lp_minimize_bounded(const QMat& A, const QVec& b, const QVec& c) {
    QVec y, x;
    Q v;
    switch (solve_dual(A, b, c, y, x, v)) {
        case DualOutcome::Optimal: return finish(A, b, c, std::move(y), std::move(x), v);
        case DualOutcome::Unbounded:
        case DualOutcome::Infeasible: {
            LPResult r;
            r.status = LPStatus::Infeasible;
            return r;
        }
    }
    return {};
}

LPResult lp_minimize(const QMat& A, const QVec& b, const QVec& c) {
    QVec y, x;
    Q v;
    LPResult r;
    switch (solve_dual(A, b, c, y, x, v)) {
        case DualOutcome::Optimal: return finish(A, b, c, std::move(y), std::move(x), v);
        case DualOutcome::Unbounded: r.status = LPStatus::Infeasible; return r;
        case DualOutcome::Infeasible:
            r.status = lp_feasible(A, b) ? LPStatus::Unbounded : LPStatus::Infeasible;
            return r;
    }
    return r;
}

QVec lp_descent_ray(const QMat& A, const QVec& c) {
    int k = int(c.size());
    QMat box(A);
    QVec rhs(A.size(), Q(0));
    for (int i = 0; i < k; ++i) {
        QVec up(k, Q(0)), dn(k, Q(0));
        up[i] = 1;
        dn[i] = -1;
        box.push_back(up);
        rhs.push_back(-1);
        box.push_back(dn);
        rhs.push_back(-1);
    }
    auto r = lp_minimize_bounded(box, rhs, c);
    if (r.status != LPStatus::Optimal || sgn(r.value) >= 0) return {};
    return r.x;
}

}  // namespace iart
