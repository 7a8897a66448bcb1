#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "iart/arpresent.hpp"
#include "iart/linalg.hpp"

using namespace iart;

namespace {

std::vector<ValuedQuiver> sample_quivers() {
    std::vector<ValuedQuiver> qs;
    const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                     {'C', 3}, {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}};
    for (auto [t, n] : types)
        for (auto& q : all_orientations(t, n)) qs.push_back(q);
    qs.push_back(build_dynkin('E', 7));
    qs.push_back(build_dynkin('E', 8));
    return qs;
}

std::shared_ptr<const PresentationCatalog> catalog(const ValuedQuiver& q) {
    return std::make_shared<const PresentationCatalog>(enumerate_presentations(q));
}

}  // namespace

TEST_CASE("A2 knitting by hand") {
    auto ar = knit_rep_ar(build_dynkin('A', 2, {{0, 1}}));
    REQUIRE(ar.size() == 3);
    int p1 = ar.projective[0], p2 = ar.projective[1], s1 = ar.simple[0];
    CHECK(ar.dims[p1] == IVec{1, 1});
    CHECK(ar.dims[p2] == IVec{0, 1});
    CHECK(ar.dims[s1] == IVec{1, 0});
    CHECK(ar.tau[s1] == p2);
    CHECK(ar.injective[0] == s1);
    CHECK(ar.injective[1] == p1);
    auto h = hom_dim_table(ar);
    CHECK(h[p2][p1] == 1);
    CHECK(h[p1][p2] == 0);
}

TEST_CASE("A1 has a single simple projective") {
    auto ar = knit_rep_ar(build_dynkin('A', 1));
    CHECK(ar.size() == 1);
    CHECK(ar.mesh(0).empty());
}

TEST_CASE("knitting agrees with Gabriel and the Coxeter transformation") {
    for (const auto& q : sample_quivers()) {
        CAPTURE(q.name());
        CAPTURE(q.orientation_string());
        auto cd = cartan_data(q);
        auto ar = knit_rep_ar(q);
        auto roots = positive_roots(cd.cartan).simple_coords;
        std::set<IVec> want(roots.begin(), roots.end());
        std::set<IVec> got(ar.dims.begin(), ar.dims.end());
        CHECK(int(got.size()) == ar.size());
        CHECK(got == want);
        // dim(tau N) E^T = -dim(N) E, i.e. tau acts by the Coxeter matrix -E E^{-T}.
        auto et = transpose(cd.euler);
        for (int m = 0; m < ar.size(); ++m) {
            if (ar.tau[m] < 0) continue;
            CHECK(vecmat(ar.dims[ar.tau[m]], et) == scale(vecmat(ar.dims[m], cd.euler), -1));
        }
        for (int m = 0; m < ar.size(); ++m) {
            CHECK((ar.tau[m] < 0) == (ar.level[m] == 0));
            bool inj = false;
            for (int i = 0; i < q.n; ++i) inj = inj || ar.injective[i] == m;
            CHECK((ar.tau_inv[m] < 0) == inj);
        }
        for (const auto& a : ar.arrows) CHECK(a.a * ar.dring[a.src] == a.b * ar.dring[a.dst]);

        auto h = hom_dim_table(ar);
        for (int m = 0; m < ar.size(); ++m) CHECK(h[m][m] == ar.dring[m]);
        CHECK(euler_form_consistent(ar, h, cd.euler));
    }
}

TEST_CASE("A2 catalog") {
    auto cat = catalog(build_dynkin('A', 2, {{0, 1}}));
    CHECK(cat->size() == 7);
    int s1 = cat->ar.simple[0];
    const auto& f = cat->items[s1];
    CHECK(f.kind == PKind::Module);
    CHECK(f.f_minus == IVec{1, 0});
    CHECK(f.f_plus == IVec{0, 1});
    CHECK(cat->orbits[0] == std::vector<int>{cat->pos[0], s1, cat->neg[1]});
    CHECK(cat->orbits[1] == std::vector<int>{cat->pos[1], cat->neg[0]});
    CHECK(cat->items[cat->neu[0]].triple() == IVec{0, 0, 1, 0, 1, 0});
    CHECK(f.triple() == IVec{1, 0, 1, 0, 0, 1});
}

TEST_CASE("catalog invariants") {
    for (const auto& q : sample_quivers()) {
        CAPTURE(q.name());
        CAPTURE(q.orientation_string());
        auto cat = catalog(q);
        int nroots = int(positive_roots(cat->cd.cartan).simple_coords.size());
        CHECK(cat->size() == nroots + 2 * q.n);
        CHECK(cat->star == star_permutation(cat->cd.cartan));
        std::set<std::pair<IVec, IVec>> weights;
        for (const auto& p : cat->items) {
            CHECK(is_nonneg(p.f_minus));
            CHECK(is_nonneg(p.f_plus));
            weights.insert({p.f_minus, p.f_plus});
            if (p.kind == PKind::Module)
                CHECK(p.reduced() == scale(vecmat(cat->ar.dims[p.module], cat->cd.El), -1));
            if (p.kind == PKind::Neutral) CHECK(is_zero(p.e_vec));
        }
        CHECK(int(weights.size()) == cat->size());
        for (int i = 0; i < q.n; ++i) {
            CHECK(cat->items[cat->orbits[i][0]].kind == PKind::Positive);
            CHECK(cat->orbits[i].back() == cat->neg[cat->star[i]]);
            for (int t = 0; t <= cat->tmax[i]; ++t) {
                const auto& p = cat->items[cat->orbits[i][t]];
                CHECK(p.e_vec == unit(q.n, i));
                CHECK(p.dual_i == cat->star[i]);
                CHECK(p.dual_t == cat->tmax[i] - t);
            }
        }
    }
}

TEST_CASE("D4 catalog sizes") {
    auto cat = catalog(build_dynkin('D', 4));
    CHECK(cat->size() == 20);
    int modules = 0;
    for (const auto& p : cat->items) modules += p.kind == PKind::Module;
    CHECK(modules == 8);
    for (int i = 0; i < 4; ++i) CHECK(cat->orbits[i].size() == 4);
}

TEST_CASE("ice quivers and weight configurations") {
    for (const auto& q : sample_quivers()) {
        CAPTURE(q.name());
        CAPTURE(q.orientation_string());
        auto cat = catalog(q);
        int nmod = cat->size() - 3 * q.n;  // transitive = non-projective modules
        for (auto v : {Variant::Full2, Variant::U, Variant::Sharp, Variant::L, Variant::R}) {
            CAPTURE(variant_name(v));
            auto iq = build_ice_quiver(cat, v);
            CHECK(int(iq.mut.size()) == nmod);
            int expect = v == Variant::Full2 ? nmod + 3 * q.n : nmod + q.n * (v == Variant::Sharp ? 2 : 1);
            CHECK(iq.size() == expect);
            auto b = iq.bmat();
            CHECK(rank_q(b) == nmod);
            if (q.simply_laced())
                for (const auto& a : iq.arrows) CHECK((a.a == 1 && a.b == 1));
            if (v == Variant::L || v == Variant::R) continue;
            auto wc = weight_configuration(iq);
            CHECK(annihilates(b, wc.sigma));
            if (v == Variant::Full2) CHECK(rank_q(wc.sigma) == 3 * q.n);
        }
        // Mesh additivity of the weight vector (f_-, f_+) at every transitive vertex.
        auto wt = [](const Presentation& p) {
            IVec w(p.f_minus);
            w.insert(w.end(), p.f_plus.begin(), p.f_plus.end());
            return w;
        };
        auto iq = build_ice_quiver(cat, Variant::Full2);
        for (int u : iq.mut) {
            int tu = cat->tau[iq.verts[u]];
            IVec lhs = add(wt(iq.item(u)), wt(cat->items[tu]));
            IVec rhs(lhs.size(), 0);
            for (const auto& a : iq.arrows)
                if (a.dst == u && a.type != ArrowType::C) rhs = add(rhs, scale(wt(iq.item(a.src)), a.a));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("A2 ice quiver") {
    auto cat = catalog(build_dynkin('A', 2, {{0, 1}}));
    auto iq = build_ice_quiver(cat, Variant::Full2);
    CHECK(iq.size() == 7);
    REQUIRE(iq.mut.size() == 1);
    auto wc = weight_configuration(iq);
    CHECK(wc.sigma[iq.mut[0]] == IVec{1, 0, 1, 0, 0, 1});
    auto u = build_ice_quiver(cat, Variant::U);
    auto wu = weight_configuration(u);
    CHECK(wu.sigma[u.mut[0]] == IVec{2, -1});
    CHECK(wu.sigma[u.mut[0]] == cat->cd.cartan[0]);
}

TEST_CASE("G2 valued arrows") {
    auto cat = catalog(build_dynkin('G', 2, {{0, 1}}));
    CHECK(cat->ar.dims[cat->ar.injective[1]] == IVec{3, 1});
    auto iq = build_ice_quiver(cat, Variant::Full2);
    bool valued = false;
    for (const auto& a : iq.arrows) valued = valued || a.a == 3 || a.b == 3;
    CHECK(valued);
    CHECK_THROWS_AS(parse_variant("full3"), InvalidInput);
}
