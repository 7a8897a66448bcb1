#include "iart/linalg.hpp"

namespace iart {

IVec primitive_integer(const QVec& v) {
    Z l = 1;
    for (const auto& x : v) l = lcm(l, Z(x.get_den()));
    std::vector<Z> w;
    Z g = 0;
    for (const auto& x : v) {
        Z y = Z(x.get_num()) * (l / Z(x.get_den()));
        w.push_back(y);
        g = gcd(g, y);
    }
    IVec r;
    for (auto& y : w) {
        if (g != 0) y /= g;
        require(y.fits_slong_p(), "integer overflow in primitive vector");
        r.push_back(y.get_si());
    }
    return r;
}

int rank_q(const IMat& a) { return rank_of(to_field<Q>(a)); }

QMat inverse_q(const IMat& a) {
    int n = int(a.size());
    QMat aug(n, QVec(2 * n, Q(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) throw InvariantViolation("singular matrix");
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace iart
