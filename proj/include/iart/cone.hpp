#pragma once

// Subrepresentations of the T_v, the inequality matrices H_u, H_l, H_r and the
// g-vector cones of the five ice-quiver variants.

#include <set>
#include <string>
#include <vector>

#include "iart/pathalg.hpp"

namespace iart {

// Dimension vectors of all nonzero subrepresentations (full module included)
// of t over F_p.  Throws Unsupported when the total dimension exceeds cap.
std::set<IVec> subreps_bruteforce(const RepZ& t, int p, int cap = 24);

enum class SubrepSource { BruteForce, FPoly, Both };

struct ConeColumn {
    int frozen = -1;  // catalog index of v
    int group = 0;    // 0: H_u (v negative), 1: H_l (v neutral), 2: H_r (v positive)
    IVec h;           // over the ambient vertices
};

struct ConeSpec {
    Variant variant = Variant::Full2;
    std::vector<int> ambient;  // catalog indices
    std::vector<ConeColumn> columns;

    IMat H() const;  // ambient x columns
    std::vector<std::string> header(const PresentationCatalog& cat) const;
};

// Per frozen catalog vertex: (all nonzero subreps over the full2 quiver, full dim vector).
struct TvSubreps {
    int v = -1;
    IVec full;
    std::set<IVec> all;
    std::set<IVec> strict() const;
};

// Everything the cone needs for a simply-laced quiver.
struct ConeInputs {
    std::shared_ptr<const PresentationCatalog> cat;
    std::shared_ptr<const C2Model> model;
    IceQuiver full2;
    IrrMaps irr;
    std::vector<TvSubreps> tv;  // one per frozen vertex, in catalog order
};

// Builds the T_v and enumerates their subrepresentations by brute force over F_2
// and F_3 (which must agree), or through the F-polynomial route, or both.
ConeInputs prepare_cone_inputs(const ValuedQuiver& q, SubrepSource src = SubrepSource::BruteForce,
                               BasisChoice choice = BasisChoice::Primary);

ConeSpec assemble_cone(const ConeInputs& in, Variant v);

// Drops every column implied by the remaining ones (exact LP with a box normalization).
ConeSpec prune_redundant(const ConeSpec& c);

}  // namespace iart
