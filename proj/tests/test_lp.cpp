#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iart/lp.hpp"

using namespace iart;

namespace {

QMat qm(const IMat& m) {
    QMat out;
    for (const auto& r : m) {
        QVec row;
        for (auto x : r) row.push_back(Q(x));
        out.push_back(row);
    }
    return out;
}

QVec qv(const IVec& v) {
    QVec out;
    for (auto x : v) out.push_back(Q(x));
    return out;
}

}  // namespace

TEST_CASE("box minimum") {
    // x >= 1, y >= 2, -x - y >= -10
    auto A = qm({{1, 0}, {0, 1}, {-1, -1}});
    auto b = qv({1, 2, -10});
    auto r = lp_minimize(A, b, qv({1, 1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 3);
    CHECK(r.x == qv({1, 2}));
    auto s = lp_minimize(A, b, qv({-1, 0}));
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.value == -8);
}

TEST_CASE("fractional optimum") {
    // 2x >= 1, -x >= -3 ; minimize x
    auto r = lp_minimize(qm({{2}, {-1}}), qv({1, -3}), qv({1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Q(1, 2));
}

TEST_CASE("infeasible and unbounded are distinguished") {
    auto A = qm({{1}, {-1}});
    CHECK(lp_minimize(A, qv({2, -1}), qv({1})).status == LPStatus::Infeasible);
    CHECK_FALSE(lp_feasible(A, qv({2, -1})));
    auto r = lp_minimize(qm({{1, 0}}), qv({0}), qv({0, 1}));
    CHECK(r.status == LPStatus::Unbounded);
    CHECK(lp_feasible(qm({{1, 0}}), qv({0})));
}

TEST_CASE("dual certificate has the primal value") {
    auto A = qm({{1, 2}, {3, 1}, {1, 0}, {0, 1}});
    auto b = qv({4, 6, 0, 0});
    auto c = qv({1, 1});
    auto r = lp_minimize(A, b, c);
    REQUIRE(r.status == LPStatus::Optimal);
    Q by = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        CHECK(sgn(r.y[i]) >= 0);
        by += b[i] * r.y[i];
    }
    CHECK(by == r.value);
    CHECK(r.value == Q(14, 5));
}

TEST_CASE("descent rays") {
    // cone x >= 0, y >= 0: no descent for c = (1, 1), a ray for c = (1, -1)
    auto A = qm({{1, 0}, {0, 1}});
    CHECK(lp_descent_ray(A, qv({1, 1})).empty());
    auto r = lp_descent_ray(A, qv({1, -1}));
    REQUIRE(r.size() == 2);
    CHECK(sgn(r[0]) >= 0);
    CHECK(sgn(r[1]) >= 0);
    CHECK(sgn(r[0] - r[1]) < 0);
}

TEST_CASE("bounded variant agrees on bounded problems") {
    auto A = qm({{1, 0}, {0, 1}, {-1, -1}});
    auto b = qv({0, 0, -5});
    for (const auto& c : {qv({1, 2}), qv({-1, 0}), qv({-2, -1})}) {
        auto a = lp_minimize(A, b, c);
        auto f = lp_minimize_bounded(A, b, c);
        REQUIRE(a.status == LPStatus::Optimal);
        REQUIRE(f.status == LPStatus::Optimal);
        CHECK(a.value == f.value);
    }
}
