#pragma once

// Auslander-Reiten knitting for Rep(Q), the catalog of indecomposable two-term
// projective presentations, and the iARt ice quivers built from them.

#include <memory>
#include <string>
#include <vector>

#include "iart/common.hpp"
#include "iart/rootdata.hpp"

namespace iart {

// Valued arrow X -> Y: a = multiplicity of X in the minimal right almost split
// map into Y, b = multiplicity of Y in the minimal left almost split map out
// of X.  Always a * d_X = b * d_Y.
struct ARArrow {
    int src = 0, dst = 0;
    i64 a = 1, b = 1;
};

struct ARQuiver {
    ValuedQuiver q;
    std::vector<IVec> dims;  // over the division rings, one entry per vertex of Q
    std::vector<int> orbit;  // module = tau^{-level} P_orbit
    std::vector<int> level;
    std::vector<int> tau, tau_inv;  // -1 when undefined
    std::vector<ARArrow> arrows;
    std::vector<int> projective, injective, simple;  // per vertex of Q
    IVec dring;  // dimension of End(M)/rad over the base field

    int size() const { return int(dims.size()); }
    int find(const IVec& dim) const;  // -1 if absent
    // Middle term of the almost split sequence ending at a non-projective module.
    std::vector<std::pair<int, i64>> mesh(int m) const;
};

ARQuiver knit_rep_ar(const ValuedQuiver& q, int cap = 100000);

// dim_F Hom(M, N) for all pairs of indecomposables.
IMat hom_dim_table(const ARQuiver& ar);

// Checks dim Hom(M,N) - dim Ext(M,N) = dim M . E . dim N^T on every pair.
bool euler_form_consistent(const ARQuiver& ar, const IMat& hom, const IMat& euler);

enum class PKind { Negative, Positive, Neutral, Module };

struct Presentation {
    PKind kind = PKind::Module;
    int vertex = -1;  // i for O_i^-, O_i^+, Id_i
    int module = -1;  // indecomposable module index (negative: P_i; module: M)
    IVec f_minus, f_plus, e_vec;
    int orbit_i = -1, orbit_t = -1;  // f = tau^t(O_i^+)
    int dual_i = -1, dual_t = -1;    // f = tau^{-t}(O_i^-)
    i64 dring = 1;
    std::string label;

    bool frozen() const { return kind != PKind::Module; }
    IVec reduced() const { return sub(f_plus, f_minus); }
    IVec triple() const;  // (e(f), f_-, f_+)
};

struct PresentationCatalog {
    ValuedQuiver q;
    CartanData cd;
    ARQuiver ar;
    IMat hom;
    std::vector<Presentation> items;  // modules in knitting order, then O_i^+, then Id_i
    std::vector<int> tau, tau_inv;
    std::vector<int> neg, pos, neu;  // catalog index of O_i^-, O_i^+, Id_i
    std::vector<int> tmax;           // t_i
    std::vector<int> star;           // from orbit threading
    std::vector<std::vector<int>> orbits;  // orbits[i][t] = tau^t(O_i^+)
    std::vector<int> topo_rank;      // i < j in this rank whenever i -> j in Q

    int size() const { return int(items.size()); }
    int index_of_label(int i, int t) const { return orbits.at(i).at(t); }
    int find_by_weights(const IVec& fm, const IVec& fp) const;  // -1 if absent
};

PresentationCatalog enumerate_presentations(const ValuedQuiver& q);

enum class Variant { Full2, U, Sharp, L, R };
enum class ArrowType { A, B, C };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct IceArrow {
    int src = 0, dst = 0;  // local vertex indices
    i64 a = 1, b = 1;
    ArrowType type = ArrowType::A;
};

struct IceQuiver {
    std::shared_ptr<const PresentationCatalog> cat;
    Variant variant = Variant::Full2;
    std::vector<int> verts;  // catalog indices of surviving vertices
    std::vector<int> local;  // catalog index -> local index or -1
    std::vector<bool> frozen;
    std::vector<IceArrow> arrows;
    IMat bfull;            // square exchange matrix over all vertices
    IVec symmetrizer;      // diag(s) * bfull is skew-symmetric
    std::vector<int> mut;  // local indices of mutable vertices

    int size() const { return int(verts.size()); }
    IMat bmat() const;  // restricted: mutable rows, all columns
    const Presentation& item(int local_index) const { return cat->items[verts[local_index]]; }
};

IceQuiver build_ice_quiver(std::shared_ptr<const PresentationCatalog> cat, Variant v);

struct WeightConfig {
    IMat sigma;  // one row per vertex of the ice quiver
    std::string label;
};

WeightConfig weight_configuration(const IceQuiver& iq);

// B * sigma == 0 over the mutable rows.
bool annihilates(const IMat& b, const IMat& sigma);

}  // namespace iart
