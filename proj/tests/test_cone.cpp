#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <tuple>

#include "iart/cone.hpp"

using namespace iart;

namespace {

// Strict subrep counts per frozen vertex: (negative | positive | neutral), each by vertex i.
std::vector<IVec> strict_counts(const ConeInputs& in) {
    const auto& cat = *in.cat;
    int n = cat.q.rank;
    std::vector<IVec> out(3, IVec(n, 0));
    for (const auto& ts : in.tv) {
        const auto& p = cat.items[ts.v];
        int g = p.kind == PKind::Negative ? 0 : p.kind == PKind::Positive ? 1 : 2;
        out[g][p.vertex] = i64(ts.strict().size());
    }
    return out;
}

const TvSubreps& tv_of(const ConeInputs& in, int v) {
    for (const auto& ts : in.tv)
        if (ts.v == v) return ts;
    throw std::runtime_error("no T_v");
}

}  // namespace

TEST_CASE("thin uniserial chain has its tails as subrepresentations") {
    RepZ t;
    t.dims = {1, 1, 1};
    t.arrows = {{0, 1}, {1, 2}};
    t.mats = {{{1}}, {{1}}};
    for (int p : {2, 3}) {
        auto s = subreps_bruteforce(t, p);
        CHECK(s == std::set<IVec>{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    }
}

TEST_CASE("two-dimensional vertex with a rank one map") {
    // k^2 -> k by the first projection: subspaces of k^2 mapping into 0 or k.
    RepZ t;
    t.dims = {2, 1};
    t.arrows = {{0, 1}};
    t.mats = {{{1, 0}}};
    auto s = subreps_bruteforce(t, 2);
    CHECK(s == std::set<IVec>{{0, 1}, {1, 0}, {1, 1}, {2, 1}});
}

TEST_CASE("brute force refuses oversized modules") {
    RepZ t;
    t.dims = {30};
    t.mats = {};
    CHECK_THROWS_AS(subreps_bruteforce(t, 2, 24), Unsupported);
}

TEST_CASE("T_{O_i^-} subrepresentations are the tails of its orbit chain") {
    for (const auto& q : {build_dynkin('A', 2), build_dynkin('A', 3), build_dynkin('D', 4)}) {
        auto in = prepare_cone_inputs(q);
        const auto& cat = *in.cat;
        for (int i = 0; i < q.rank; ++i) {
            const auto& chain = cat.orbits[cat.star[i]];
            std::set<IVec> want;
            for (size_t s = 0; s < chain.size(); ++s) {
                IVec v(in.full2.size(), 0);
                for (size_t t = s; t < chain.size(); ++t) v[in.full2.local[chain[t]]] = 1;
                want.insert(v);
            }
            CHECK(tv_of(in, cat.neg[i]).all == want);
        }
    }
}

TEST_CASE("A2 strict subrepresentations") {
    auto in = prepare_cone_inputs(build_dynkin('A', 2));
    const auto& cat = *in.cat;
    // The longer chain (length 3) gives 2 strict subreps, the other 1.
    std::vector<size_t> neg;
    for (int i = 0; i < 2; ++i) neg.push_back(tv_of(in, cat.neg[i]).strict().size());
    std::sort(neg.begin(), neg.end());
    CHECK(neg == std::vector<size_t>{1, 2});
    auto c = assemble_cone(in, Variant::Full2);
    size_t total = 0;
    for (const auto& ts : in.tv) total += ts.strict().size();
    CHECK(c.columns.size() == total);
}

TEST_CASE("A2 u-variant columns") {
    auto in = prepare_cone_inputs(build_dynkin('A', 2));
    const auto& cat = *in.cat;
    auto c = assemble_cone(in, Variant::U);
    std::map<int, int> per;
    for (const auto& col : c.columns) {
        CHECK(col.group == 0);
        ++per[cat.items[col.frozen].vertex];
    }
    for (int i = 0; i < 2; ++i) CHECK(per[i] == int(cat.orbits[cat.star[i]].size()) - 1);
}

TEST_CASE("D4 fixture: 3333 | 7611 | 1277 and 44 irredundant inequalities") {
    auto q = build_dynkin('D', 4, parse_orientation("2>1,3>2,4>2"));
    auto in = prepare_cone_inputs(q);
    auto counts = strict_counts(in);
    CHECK(counts[0] == IVec{3, 3, 3, 3});
    CHECK(counts[1] == IVec{7, 6, 1, 1});
    CHECK(counts[2] == IVec{1, 2, 7, 7});
    auto c = assemble_cone(in, Variant::Full2);
    CHECK(c.columns.size() == 44);
    CHECK(prune_redundant(c).columns.size() == 44);
}

TEST_CASE("columns are nonnegative, nonzero, distinct and ordered") {
    for (const auto& q : all_orientations('A', 3)) {
        auto in = prepare_cone_inputs(q);
        for (auto v : {Variant::Full2, Variant::U, Variant::Sharp, Variant::L, Variant::R}) {
            CAPTURE(variant_name(v));
            auto c = assemble_cone(in, v);
            REQUIRE_FALSE(c.columns.empty());
            for (const auto& col : c.columns) {
                CHECK(is_nonneg(col.h));
                CHECK_FALSE(is_zero(col.h));
                CHECK(col.h.size() == c.ambient.size());
            }
            for (size_t k = 1; k < c.columns.size(); ++k) {
                const auto& a = c.columns[k - 1];
                const auto& b = c.columns[k];
                CHECK(std::tie(a.group, a.frozen, a.h) < std::tie(b.group, b.frozen, b.h));
            }
            auto H = c.H();
            CHECK(H.size() == c.ambient.size());
            CHECK(c.header(*in.cat).size() == c.columns.size());
        }
    }
}

TEST_CASE("pruning removes duplicates and sums") {
    ConeSpec c;
    c.ambient = {0, 1, 2};
    c.columns = {{0, 0, {1, 0, 0}}, {0, 0, {0, 1, 0}}, {1, 0, {1, 1, 0}}, {2, 0, {0, 1, 0}}, {3, 0, {0, 0, 1}}};
    auto p = prune_redundant(c);
    std::set<IVec> kept;
    for (const auto& col : p.columns) kept.insert(col.h);
    CHECK(p.columns.size() == 3);
    CHECK(kept == std::set<IVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("F-polynomial route agrees with brute force") {
    for (const auto& q : all_orientations('A', 3)) {
        CAPTURE(q.orientation_string());
        CHECK_NOTHROW(prepare_cone_inputs(q, SubrepSource::Both));
    }
}

TEST_CASE("valued types have no cone") {
    CHECK_THROWS_AS(prepare_cone_inputs(build_dynkin('B', 2)), Unsupported);
    CHECK_THROWS_AS(prepare_cone_inputs(build_dynkin('G', 2)), Unsupported);
}
