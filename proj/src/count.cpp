#include "iart/count.hpp"

#include <algorithm>
#include <functional>

#include "iart/lp.hpp"
#include "iart/rootdata.hpp"

namespace iart {

namespace {

Z floor_q(const Q& x) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& x) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

i64 to_i64(const Z& z) {
    require(z.fits_slong_p(), "integer overflow in lattice reduction");
    return z.get_si();
}

}  // namespace

IMat cone_sigma(const ConeInputs& in, const ConeSpec& c) {
    auto iq = build_ice_quiver(in.cat, c.variant);
    require(iq.verts == c.ambient, "cone ambient differs from its ice quiver");
    return weight_configuration(iq).sigma;
}

IVec slice_target(Variant v, const std::vector<IVec>& weights) {
    size_t want = v == Variant::Full2 ? 3 : v == Variant::U ? 1 : v == Variant::Sharp ? 2 : 0;
    if (!want) throw Unsupported("no slice grading for variant " + variant_name(v));
    if (weights.size() != want) throw InvalidInput("wrong number of weights for variant " + variant_name(v));
    IVec t;
    for (const auto& w : weights) t.insert(t.end(), w.begin(), w.end());
    return t;
}

SliceCounter::SliceCounter(const IMat& H, const IMat& sigma) : H_(H), sigma_(sigma) {
    int n = int(sigma.size());
    int k = n ? int(sigma[0].size()) : 0;
    E_.assign(n, std::vector<Z>(k));
    U_.assign(n, std::vector<Z>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) E_[i][j] = Z(sigma[i][j]);
        U_[i][i] = 1;
    }
    auto axpy = [&](int dst, int src, const Z& q) {  // row dst -= q * row src
        for (int j = 0; j < k; ++j) E_[dst][j] -= q * E_[src][j];
        for (int j = 0; j < n; ++j) U_[dst][j] -= q * U_[src][j];
    };
    int r = 0;
    for (int c = 0; c < k && r < n; ++c) {
        for (;;) {
            int best = -1;
            for (int i = r; i < n; ++i)
                if (E_[i][c] != 0 && (best < 0 || abs(E_[i][c]) < abs(E_[best][c]))) best = i;
            if (best < 0) break;
            std::swap(E_[r], E_[best]);
            std::swap(U_[r], U_[best]);
            bool done = true;
            for (int i = r + 1; i < n; ++i) {
                if (E_[i][c] == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), E_[i][c].get_mpz_t(), E_[r][c].get_mpz_t());
                axpy(i, r, q);
                if (E_[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < n && E_[r][c] != 0) {
            if (E_[r][c] < 0) {
                for (auto& x : E_[r]) x = -x;
                for (auto& x : U_[r]) x = -x;
            }
            pivots_.push_back(c);
            ++r;
        }
    }
    for (int i = r; i < n; ++i) {
        IVec row;
        for (const auto& x : U_[i]) row.push_back(to_i64(x));
        K_.push_back(row);
    }
    KH_ = K_.empty() ? IMat{} : matmul(K_, H_);
    int m = int(K_.size());
    order_.resize(m);
    for (int j = 0; j < m; ++j) order_[j] = j;
    auto nnz = [&](int j) { return std::count_if(KH_[j].begin(), KH_[j].end(), [](i64 x) { return x != 0; }); };
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return nnz(a) > nnz(b); });

    // The slices share one recession cone {z : z K H >= 0}; it must be {0}.
    if (m) {
        int cols = int(KH_[0].size());
        QMat A(cols, QVec(m));
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < m; ++i) A[j][i] = KH_[i][j];
        for (int i = 0; i < m && ray_.empty(); ++i)
            for (int s : {1, -1}) {
                QVec c(m, Q(0));
                c[i] = s;
                QVec r = lp_descent_ray(A, c);
                if (r.empty()) continue;
                IVec zr = primitive_integer(r);
                ray_.assign(sigma_.size(), 0);
                for (int t = 0; t < m; ++t)
                    for (size_t v = 0; v < sigma_.size(); ++v) ray_[v] += zr[t] * K_[t][v];
                break;
            }
    }
}

IVec SliceCounter::particular(const IVec& target) const {
    int n = int(sigma_.size());
    int k = int(target.size());
    if (n && int(sigma_[0].size()) != k) throw InvalidInput("target length does not match the grading");
    std::vector<Z> h(n);
    for (size_t j = 0; j < pivots_.size(); ++j) {
        int c = pivots_[j];
        Z s = Z(target[c]);
        for (size_t i = 0; i < j; ++i) s -= h[i] * E_[i][c];
        if (!mpz_divisible_p(s.get_mpz_t(), E_[j][c].get_mpz_t())) return {};
        h[j] = s / E_[j][c];
    }
    for (int c = 0; c < k; ++c) {
        Z s = 0;
        for (size_t i = 0; i < pivots_.size(); ++i) s += h[i] * E_[i][c];
        if (s != target[c]) return {};
    }
    IVec g(n, 0);
    for (int j = 0; j < n; ++j) {
        Z s = 0;
        for (size_t i = 0; i < pivots_.size(); ++i) s += h[i] * U_[i][j];
        g[j] = to_i64(s);
    }
    return g;
}

CountResult SliceCounter::count(const IVec& target) const {
    CountResult res;
    IVec g0 = particular(target);
    if (g0.empty()) return res;
    int m = int(K_.size());
    int cols = H_.empty() ? 0 : int(H_[0].size());
    IVec base = vecmat(g0, H_);  // constraint j: sum_i z_i KH[i][j] >= -base[j]
    if (m == 0) {
        res.count = is_nonneg(base) ? 1 : 0;
        res.nodes = 1;
        return res;
    }

    QMat A(cols, QVec(m));
    QVec b(cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < m; ++i) A[j][i] = KH_[order_[i]][j];
        b[j] = -base[j];
    }
    if (!ray_.empty()) {
        if (!lp_feasible(A, b)) return res;
        res.status = CountStatus::Unbounded;
        res.ray = ray_;
        return res;
    }

    std::vector<Z> z(m);
    std::function<void(int, const QVec&)> dfs = [&](int d, const QVec& rhs) {
        ++res.nodes;
        if (d == m - 1) {
            // One variable left: intersect the half-lines directly.
            bool has_lo = false, has_hi = false;
            Z lo, hi;
            for (int j = 0; j < cols; ++j) {
                const Q& a = A[j][d];
                if (sgn(a) == 0) {
                    if (sgn(rhs[j]) > 0) return;
                    continue;
                }
                Q bound = rhs[j] / a;
                if (sgn(a) > 0) {
                    Z c = ceil_q(bound);
                    if (!has_lo || c > lo) lo = c;
                    has_lo = true;
                } else {
                    Z f = floor_q(bound);
                    if (!has_hi || f < hi) hi = f;
                    has_hi = true;
                }
            }
            require(has_lo && has_hi, "slice unbounded in the last coordinate");
            if (hi >= lo) res.count += to_i64(Z(hi - lo + 1));
            return;
        }
        int rest = m - d;
        QMat sub;
        QVec subr;
        for (int j = 0; j < cols; ++j) {
            QVec row(A[j].begin() + d, A[j].end());
            bool zero = std::all_of(row.begin(), row.end(), [](const Q& x) { return sgn(x) == 0; });
            if (zero) {
                if (sgn(rhs[j]) > 0) return;
                continue;
            }
            sub.push_back(std::move(row));
            subr.push_back(rhs[j]);
        }
        QVec c(rest, Q(0));
        c[0] = 1;
        auto lo = lp_minimize_bounded(sub, subr, c);
        if (lo.status != LPStatus::Optimal) return;
        c[0] = -1;
        auto hi = lp_minimize_bounded(sub, subr, c);
        if (hi.status != LPStatus::Optimal) return;
        Z from = ceil_q(lo.value), to = floor_q(Q(-hi.value));
        for (Z v = from; v <= to; ++v) {
            z[d] = v;
            QVec next(rhs);
            for (int j = 0; j < cols; ++j)
                if (sgn(A[j][d])) next[j] -= A[j][d] * Q(v);
            dfs(d + 1, next);
        }
    };
    dfs(0, b);
    return res;
}

CountResult count_lattice(const SlicePolytope& s) { return SliceCounter(s.H, s.sigma).count(s.target); }

bool in_slice(const SlicePolytope& s, const IVec& g) {
    if (!is_nonneg(vecmat(g, s.H))) return false;
    return vecmat(g, s.sigma) == s.target;
}

i64 kostant_partition(const IMat& cartan, const IVec& gamma) {
    int n = int(cartan.size());
    QMat inv = inverse_q(cartan);
    // gamma = x C with x in simple-root coordinates.
    IVec x(n, 0);
    for (int j = 0; j < n; ++j) {
        Q s = 0;
        for (int i = 0; i < n; ++i) s += Q(gamma[i]) * inv[i][j];
        if (s.get_den() != 1 || sgn(s) < 0) return 0;
        x[j] = s.get_num().get_si();
    }
    auto roots = positive_roots(cartan).simple_coords;
    std::function<i64(size_t, IVec&)> go = [&](size_t k, IVec& rem) -> i64 {
        if (is_zero(rem)) return 1;
        if (k == roots.size()) return 0;
        i64 total = 0;
        int used = 0;
        for (;;) {
            total += go(k + 1, rem);
            bool fits = true;
            for (int i = 0; i < n; ++i)
                if (rem[i] < roots[k][i]) fits = false;
            if (!fits) break;
            for (int i = 0; i < n; ++i) rem[i] -= roots[k][i];
            ++used;
        }
        for (int i = 0; i < n; ++i) rem[i] += used * roots[k][i];
        return total;
    };
    return go(0, x);
}

}  // namespace iart
