#pragma once

// Explicit linear algebra over the path algebra of a simply-laced Dynkin
// quiver: presentations as scalar matrices between sums of projectives, Hom
// spaces in C^2 Q, a fixed choice of irreducible morphisms, and the modules T_v.
//
// A map  (+)_c P_{type(c)} -> (+)_r P_{type(r)}  is a scalar matrix M with
// M[r][c] the coefficient of the unique path type(r) ~> type(c); the entry is
// allowed only when that path exists.  Composition is matrix product.

#include <memory>
#include <vector>

#include "iart/arpresent.hpp"

namespace iart {

struct PathAlgebra {
    int n = 0;
    std::vector<std::vector<char>> reach;  // reach[a][b]: a path a ~> b exists (a ~> a always)

    explicit PathAlgebra(const ValuedQuiver& q);
    bool allowed(int row_type, int col_type) const { return reach[row_type][col_type]; }
    int dim_hom(const std::vector<int>& src, const std::vector<int>& dst) const;  // Hom_Q of projective sums
};

// Two-term complex P_+ -> P_-; F has one row per minus summand, one column per plus summand.
struct PresMatrix {
    std::vector<int> minus, plus;
    IMat F;
};

// Morphism f -> g: plus is Phi_+ (g.plus x f.plus), minus is Phi_- (g.minus x f.minus).
struct Morphism {
    IMat plus, minus;
    bool empty() const;
};

enum class BasisChoice { Primary, Alternate };

class C2Model {
public:
    explicit C2Model(std::shared_ptr<const PresentationCatalog> cat);

    const PresentationCatalog& catalog() const { return *cat_; }
    const PathAlgebra& paths() const { return pa_; }
    const PresMatrix& pres(int k) const { return pres_[k]; }
    int size() const { return int(pres_.size()); }

    // Basis of Hom_{C^2 Q}(f, g) over Q, each element a primitive integer morphism.
    std::vector<Morphism> hom_basis(int f, int g) const;
    int hom_dim(int f, int g) const { return int(hom_basis(f, g).size()); }
    // Dimension of Hom_{C^2 Q}(f, g) over F_p.
    int hom_dim_mod(int f, int g, int p) const;

    // b o a for a: f -> g and b: g -> h.
    Morphism compose(int f, int g, int h, const Morphism& a, const Morphism& b) const;

private:
    std::shared_ptr<const PresentationCatalog> cat_;
    PathAlgebra pa_;
    std::vector<PresMatrix> pres_;
};

// Checks that F is injective at every vertex and that its cokernel is a brick,
// over Q and over F_2, F_3.
bool presentation_is_valid(const PathAlgebra& pa, const PresMatrix& p, const IVec& dim);

// One chosen irreducible morphism per non-translation arrow of the full2 ice quiver.
struct IrrMaps {
    BasisChoice choice = BasisChoice::Primary;
    std::vector<Morphism> by_arrow;  // indexed like IceQuiver::arrows; empty for translation arrows
};

// Chooses irreducible maps by knitting: sink maps of meshes are solved from the
// already chosen source maps, the remaining arrows take the Hom generator.
IrrMaps irreducible_morphisms(const C2Model& m, const IceQuiver& full2, BasisChoice choice);

// dim Irr(f, g) = dim Hom(f, g) - dim rad^2(f, g), with rad^2 spanned by
// compositions through the chosen irreducible maps into g.
int irreducible_dim(const C2Model& m, const IceQuiver& full2, const IrrMaps& irr, int f, int g);

// Checks the sink-map property: for f != g every map f -> g factors through
// the chosen irreducible maps into g.
bool sink_maps_complete(const C2Model& m, const IceQuiver& full2, const IrrMaps& irr, int g);

// Integer representation of an ice quiver.
struct RepZ {
    IVec dims;                                // per local vertex of the ice quiver
    std::vector<std::pair<int, int>> arrows;  // (src, dst) local indices
    std::vector<IMat> mats;                   // per arrow, dims[dst] x dims[src]
    int total() const;
};

// T_v for a frozen catalog vertex v, as a representation of the full2 ice quiver.
RepZ build_tv(const C2Model& m, const IceQuiver& full2, const IrrMaps& irr, int v);

// theta_v: the dimension vector T_v must have.
IVec tv_dimension(const IceQuiver& full2, int v);

// Checks the mesh relation at every transitive vertex: paths through type B
// then type A arrows and through type A then type B arrows agree.
bool satisfies_mesh_relations(const IceQuiver& full2, const RepZ& t);

}  // namespace iart
