#pragma once

// Dense exact linear algebra over a field type F (mpq_class or ModP<p>).

#include <gmpxx.h>

#include <vector>

#include "iart/common.hpp"

namespace iart {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

template <int P>
struct ModP {
    int v = 0;
    ModP() = default;
    ModP(i64 x) : v(int(((x % P) + P) % P)) {}
    friend ModP operator+(ModP a, ModP b) { return ModP(a.v + b.v); }
    friend ModP operator-(ModP a, ModP b) { return ModP(a.v - b.v + P); }
    friend ModP operator*(ModP a, ModP b) { return ModP(i64(a.v) * b.v); }
    ModP operator-() const { return ModP(P - v); }
    ModP inv() const {
        int r = 1;
        for (int e = P - 2, b = v; e > 0; e >>= 1, b = b * b % P)
            if (e & 1) r = r * b % P;
        return ModP(r);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inv(); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend bool operator!=(ModP a, ModP b) { return a.v != b.v; }
};

template <class F>
inline bool is_zero_elem(const F& x) {
    return x == F(0);
}
template <>
inline bool is_zero_elem<Q>(const Q& x) {
    return sgn(x) == 0;
}

template <class F>
std::vector<std::vector<F>> to_field(const IMat& a) {
    std::vector<std::vector<F>> r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (auto x : a[i]) r[i].push_back(F(x));
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(std::vector<std::vector<F>>& a) {
    std::vector<int> piv;
    int rows = int(a.size());
    if (!rows) return piv;
    int cols = int(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero_elem(a[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        F inv = F(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero_elem(a[i][c])) continue;
            F f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
int rank_of(std::vector<std::vector<F>> a) {
    return int(rref(a).size());
}

// Basis of {x : A x = 0}, one vector per free column, in RREF order.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> a, int cols) {
    std::vector<std::vector<F>> basis;
    if (a.empty()) {
        for (int c = 0; c < cols; ++c) {
            std::vector<F> v(cols, F(0));
            v[c] = F(1);
            basis.push_back(v);
        }
        return basis;
    }
    auto piv = rref(a);
    std::vector<int> is_piv(cols, -1);
    for (size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = int(r);
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c] >= 0) continue;
        std::vector<F> v(cols, F(0));
        v[c] = F(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][c];
        basis.push_back(v);
    }
    return basis;
}

// Scale a rational vector to a primitive integer vector (same direction).
IVec primitive_integer(const QVec& v);

// Integer rank over Q.
int rank_q(const IMat& a);

// Exact inverse of a square integer matrix over Q; throws if singular.
QMat inverse_q(const IMat& a);

}  // namespace iart
