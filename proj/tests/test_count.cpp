#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iart/count.hpp"
#include "iart/lieoracle.hpp"

using namespace iart;

namespace {

struct Cones {
    ConeInputs in;
    ConeSpec full2, u, sharp;
};

const Cones& a2() {
    static Cones c = [] {
        Cones c;
        c.in = prepare_cone_inputs(build_dynkin('A', 2));
        c.full2 = assemble_cone(c.in, Variant::Full2);
        c.u = assemble_cone(c.in, Variant::U);
        c.sharp = assemble_cone(c.in, Variant::Sharp);
        return c;
    }();
    return c;
}

i64 count_at(const ConeInputs& in, const ConeSpec& c, const std::vector<IVec>& w) {
    SlicePolytope s{c.H(), cone_sigma(in, c), slice_target(c.variant, w)};
    auto r = count_lattice(s);
    REQUIRE(r.status == CountStatus::Ok);
    return r.count;
}

std::vector<IVec> box(int n, int m) {
    std::vector<IVec> out{IVec()};
    for (int i = 0; i < n; ++i) {
        std::vector<IVec> next;
        for (const auto& v : out)
            for (int x = 0; x <= m; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("A2 tensor examples") {
    const auto& c = a2();
    CHECK(count_at(c.in, c.full2, {{1, 0}, {0, 1}, {1, 1}}) == 1);
    CHECK(count_at(c.in, c.full2, {{1, 0}, {0, 1}, {0, 0}}) == 1);
    CHECK(count_at(c.in, c.full2, {{1, 1}, {1, 1}, {1, 1}}) == 2);
    CHECK(count_at(c.in, c.full2, {{0, 0}, {0, 0}, {0, 0}}) == 1);
    CHECK(count_at(c.in, c.full2, {{1, 0}, {1, 0}, {1, 0}}) == 0);
}

TEST_CASE("non-dominant targets are empty") {
    const auto& c = a2();
    CHECK(count_at(c.in, c.full2, {{1, 0}, {0, 1}, {-1, 2}}) == 0);
}

TEST_CASE("the full2 slices are bounded") {
    const auto& c = a2();
    SliceCounter sc(c.full2.H(), cone_sigma(c.in, c.full2));
    CHECK(sc.bounded());
    auto g = sc.particular(slice_target(Variant::Full2, {{1, 1}, {1, 1}, {1, 1}}));
    REQUIRE_FALSE(g.empty());
    CHECK(vecmat(g, cone_sigma(c.in, c.full2)) == IVec{1, 1, 1, 1, 1, 1});
    for (const auto& k : sc.kernel()) CHECK(is_zero(vecmat(k, cone_sigma(c.in, c.full2))));
}

TEST_CASE("unbounded slices report a ray") {
    // One inequality g0 >= 0 with a grading on g1 only: g0 is free upward.
    IMat H{{1}, {0}};
    IMat sigma{{0}, {1}};
    SliceCounter sc(H, sigma);
    CHECK_FALSE(sc.bounded());
    auto r = sc.count({3});
    CHECK(r.status == CountStatus::Unbounded);
    REQUIRE(r.ray.size() == 2);
    CHECK(r.ray[0] > 0);
    CHECK(r.ray[1] == 0);
}

TEST_CASE("interval counting in one dimension") {
    // 0 <= g0 <= g1 with g1 = t.
    IMat H{{1, -1}, {0, 1}};
    IMat sigma{{0}, {1}};
    for (int t = 0; t < 5; ++t) CHECK(count_lattice({H, sigma, {t}}).count == t + 1);
}

TEST_CASE("symmetry and the top component") {
    const auto& c = a2();
    LieOracle lo(c.in.cat->cd.cartan);
    SliceCounter sc(c.full2.H(), cone_sigma(c.in, c.full2));
    for (const auto& mu : box(2, 2))
        for (const auto& nu : box(2, 2)) {
            CHECK(sc.count(slice_target(Variant::Full2, {mu, nu, add(mu, nu)})).count == 1);
            for (const auto& [lam, m] : lo.tensor_decomposition(mu, nu)) {
                auto a = sc.count(slice_target(Variant::Full2, {mu, nu, lam})).count;
                auto b = sc.count(slice_target(Variant::Full2, {nu, mu, lam})).count;
                CHECK(a == m);
                CHECK(a == b);
            }
        }
}

TEST_CASE("Kostant partition function") {
    IMat c = lie_cartan('A', 2);
    IVec a1 = c[0], a2r = c[1];
    CHECK(kostant_partition(c, a1) == 1);
    CHECK(kostant_partition(c, add(a1, a2r)) == 2);
    CHECK(kostant_partition(c, add(scale(a1, 2), a2r)) == 2);
    CHECK(kostant_partition(c, IVec{0, 0}) == 1);
    CHECK(kostant_partition(c, IVec{1, 0}) == 0);
    CHECK(kostant_partition(c, scale(a1, -1)) == 0);
}

TEST_CASE("u-variant slices count partitions") {
    const auto& c = a2();
    IMat cartan = c.in.cat->cd.cartan;
    for (const auto& x : box(2, 4)) {
        IVec gamma = vecmat(x, cartan);
        CHECK(count_at(c.in, c.u, {gamma}) == kostant_partition(cartan, gamma));
    }
}

TEST_CASE("sharp slices count weight multiplicities") {
    const auto& c = a2();
    LieOracle lo(c.in.cat->cd.cartan);
    for (const auto& mu : box(2, 2))
        for (const auto& [lam, m] : lo.freudenthal(mu)) CHECK(count_at(c.in, c.sharp, {mu, lam}) == m);
}

TEST_CASE("slice targets") {
    CHECK(slice_target(Variant::Full2, {{1, 0}, {0, 1}, {1, 1}}) == IVec{1, 0, 0, 1, 1, 1});
    CHECK_THROWS_AS(slice_target(Variant::Full2, {{1, 0}}), InvalidInput);
    CHECK_THROWS_AS(slice_target(Variant::L, {{1, 0}}), Unsupported);
}
