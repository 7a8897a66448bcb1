#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iart/cone.hpp"
#include "iart/pathalg.hpp"

using namespace iart;

namespace {

struct Setup {
    std::shared_ptr<const PresentationCatalog> cat;
    std::shared_ptr<const C2Model> model;
    IceQuiver full2;
};

Setup setup(const ValuedQuiver& q) {
    Setup s;
    s.cat = std::make_shared<const PresentationCatalog>(enumerate_presentations(q));
    s.model = std::make_shared<const C2Model>(s.cat);
    s.full2 = build_ice_quiver(s.cat, Variant::Full2);
    return s;
}

std::vector<ValuedQuiver> small_quivers() {
    std::vector<ValuedQuiver> qs;
    for (auto& q : all_orientations('A', 2)) qs.push_back(q);
    for (auto& q : all_orientations('A', 3)) qs.push_back(q);
    qs.push_back(build_dynkin('D', 4));
    return qs;
}

}  // namespace

TEST_CASE("A2 Hom dimensions between presentations") {
    auto s = setup(build_dynkin('A', 2, {{0, 1}}));
    const auto& m = *s.model;
    REQUIRE(m.size() == s.cat->size());
    for (int f = 0; f < m.size(); ++f) CHECK(m.hom_dim(f, f) == 1);
    // O_i^- -> Id_i -> O_i^+ are nonzero maps.
    for (int i = 0; i < 2; ++i) {
        CHECK(m.hom_dim(s.cat->neg[i], s.cat->neu[i]) >= 1);
        CHECK(m.hom_dim(s.cat->neu[i], s.cat->pos[i]) >= 1);
    }
}

TEST_CASE("presentations are bricks and Hom is stable over small primes") {
    for (const auto& q : small_quivers()) {
        CAPTURE(q.orientation_string());
        auto s = setup(q);
        const auto& m = *s.model;
        for (int f = 0; f < m.size(); ++f) {
            CHECK(m.hom_dim(f, f) == 1);
            for (int g = 0; g < m.size(); ++g) {
                int d = m.hom_dim(f, g);
                CHECK(m.hom_dim_mod(f, g, 2) == d);
                CHECK(m.hom_dim_mod(f, g, 3) == d);
            }
        }
    }
}

TEST_CASE("irreducible maps match the full2 arrows") {
    for (const auto& q : small_quivers()) {
        CAPTURE(q.orientation_string());
        auto s = setup(q);
        const auto& iq = s.full2;
        for (auto choice : {BasisChoice::Primary, BasisChoice::Alternate}) {
            auto irr = irreducible_morphisms(*s.model, iq, choice);
            IMat arrows(iq.size(), IVec(iq.size(), 0));
            for (const auto& a : iq.arrows)
                if (a.type != ArrowType::C) ++arrows[a.src][a.dst];
            for (int x = 0; x < iq.size(); ++x)
                for (int y = 0; y < iq.size(); ++y) {
                    if (x == y) continue;
                    CAPTURE(x);
                    CAPTURE(y);
                    CHECK(irreducible_dim(*s.model, iq, irr, iq.verts[x], iq.verts[y]) == arrows[x][y]);
                }
            for (int y = 0; y < iq.size(); ++y) CHECK(sink_maps_complete(*s.model, iq, irr, iq.verts[y]));
        }
    }
}

TEST_CASE("T_v has the expected dimension vector and satisfies the mesh relations") {
    for (const auto& q : small_quivers()) {
        CAPTURE(q.orientation_string());
        auto s = setup(q);
        auto irr = irreducible_morphisms(*s.model, s.full2, BasisChoice::Primary);
        for (int l = 0; l < s.full2.size(); ++l) {
            if (!s.full2.frozen[l]) continue;
            int v = s.full2.verts[l];
            auto t = build_tv(*s.model, s.full2, irr, v);
            CHECK(t.dims == tv_dimension(s.full2, v));
            CHECK(satisfies_mesh_relations(s.full2, t));
            for (size_t k = 0; k < t.arrows.size(); ++k) {
                auto [a, b] = t.arrows[k];
                CHECK(int(t.mats[k].size()) == t.dims[b]);
            }
        }
    }
}

TEST_CASE("the subrepresentation sets do not depend on the choice of irreducible maps") {
    for (const auto& q : all_orientations('A', 3)) {
        CAPTURE(q.orientation_string());
        auto a = prepare_cone_inputs(q, SubrepSource::BruteForce, BasisChoice::Primary);
        auto b = prepare_cone_inputs(q, SubrepSource::BruteForce, BasisChoice::Alternate);
        REQUIRE(a.tv.size() == b.tv.size());
        for (size_t k = 0; k < a.tv.size(); ++k) CHECK(a.tv[k].all == b.tv[k].all);
    }
}
