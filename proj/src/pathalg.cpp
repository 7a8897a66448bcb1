#include "iart/pathalg.hpp"

#include <algorithm>
#include <functional>

#include "iart/linalg.hpp"

namespace iart {

namespace {

std::vector<int> expand(const IVec& mult) {
    std::vector<int> types;
    for (int i = 0; i < int(mult.size()); ++i)
        for (i64 k = 0; k < mult[i]; ++k) types.push_back(i);
    return types;
}

// rows x cols product of a (rows x inner) and b (inner x cols); shapes passed explicitly
// because empty IMats carry no column count.
IMat mul(const IMat& a, const IMat& b, int rows, int inner, int cols) {
    IMat r = zeros(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k) {
            if (!a[i][k]) continue;
            for (int j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Restriction of F to vertex j of Q.
IMat at_vertex(const PathAlgebra& pa, const PresMatrix& p, int j) {
    IMat r;
    for (size_t a = 0; a < p.minus.size(); ++a) {
        if (!pa.reach[p.minus[a]][j]) continue;
        IVec row;
        for (size_t b = 0; b < p.plus.size(); ++b)
            if (pa.reach[p.plus[b]][j]) row.push_back(p.F[a][b]);
        r.push_back(row);
    }
    return r;
}

struct Layout {
    std::vector<std::pair<int, int>> plus, minus;  // allowed positions of Phi_+, Phi_-
    int size() const { return int(plus.size() + minus.size()); }
};

Layout layout(const PathAlgebra& pa, const PresMatrix& f, const PresMatrix& g) {
    Layout l;
    for (size_t r = 0; r < g.plus.size(); ++r)
        for (size_t c = 0; c < f.plus.size(); ++c)
            if (pa.allowed(g.plus[r], f.plus[c])) l.plus.push_back({int(r), int(c)});
    for (size_t r = 0; r < g.minus.size(); ++r)
        for (size_t c = 0; c < f.minus.size(); ++c)
            if (pa.allowed(g.minus[r], f.minus[c])) l.minus.push_back({int(r), int(c)});
    return l;
}

// Equations G Phi_+ = Phi_- F, one row per allowed (g.minus, f.plus) position.
IMat hom_equations(const PathAlgebra& pa, const PresMatrix& f, const PresMatrix& g, const Layout& l) {
    IMat eq;
    int np = int(l.plus.size());
    for (size_t r = 0; r < g.minus.size(); ++r)
        for (size_t c = 0; c < f.plus.size(); ++c) {
            if (!pa.allowed(g.minus[r], f.plus[c])) continue;
            IVec row(l.size(), 0);
            for (int k = 0; k < np; ++k) {
                auto [kr, kc] = l.plus[k];
                if (kc == int(c)) row[k] += g.F[r][kr];
            }
            for (size_t k = 0; k < l.minus.size(); ++k) {
                auto [kr, kc] = l.minus[k];
                if (kr == int(r)) row[np + k] -= f.F[kc][c];
            }
            eq.push_back(row);
        }
    return eq;
}

Morphism unpack(const PresMatrix& f, const PresMatrix& g, const Layout& l, const IVec& x) {
    Morphism m;
    m.plus = zeros(int(g.plus.size()), int(f.plus.size()));
    m.minus = zeros(int(g.minus.size()), int(f.minus.size()));
    int np = int(l.plus.size());
    for (int k = 0; k < np; ++k) m.plus[l.plus[k].first][l.plus[k].second] = x[k];
    for (size_t k = 0; k < l.minus.size(); ++k) m.minus[l.minus[k].first][l.minus[k].second] = x[np + k];
    return m;
}

IVec flatten(const Morphism& m) {
    IVec v;
    for (const auto& r : m.plus) v.insert(v.end(), r.begin(), r.end());
    for (const auto& r : m.minus) v.insert(v.end(), r.begin(), r.end());
    return v;
}

template <class F>
int nullity(const IMat& eq, int cols) {
    if (eq.empty()) return cols;
    return cols - rank_of(to_field<F>(eq));
}

template <class F>
bool injective_and_brick(const PathAlgebra& pa, const PresMatrix& p) {
    for (int j = 0; j < pa.n; ++j) {
        auto fj = at_vertex(pa, p, j);
        int cols = 0;
        for (int t : p.plus) cols += pa.reach[t][j];
        if (cols && rank_of(to_field<F>(fj)) != cols) return false;
    }
    auto l = layout(pa, p, p);
    int end_c2 = nullity<F>(hom_equations(pa, p, p, l), l.size());
    return end_c2 - pa.dim_hom(p.minus, p.plus) == 1;
}

IVec normalized(const QVec& v, BasisChoice choice) {
    IVec r = primitive_integer(v);
    for (auto x : r)
        if (x) {
            bool flip = (x > 0) != (choice == BasisChoice::Primary);
            if (flip) r = scale(r, -1);
            break;
        }
    return r;
}

}  // namespace

PathAlgebra::PathAlgebra(const ValuedQuiver& q) : n(q.n), reach(q.n, std::vector<char>(q.n, 0)) {
    require(q.simply_laced(), "path algebra model requires a simply-laced quiver");
    for (int a = 0; a < n; ++a) reach[a][a] = 1;
    for (int round = 0; round < n; ++round)
        for (const auto& e : q.arrows)
            for (int a = 0; a < n; ++a)
                if (reach[a][e.src]) reach[a][e.dst] = 1;
}

int PathAlgebra::dim_hom(const std::vector<int>& src, const std::vector<int>& dst) const {
    int d = 0;
    for (int r : dst)
        for (int c : src) d += reach[r][c];
    return d;
}

bool Morphism::empty() const { return plus.empty() && minus.empty(); }

bool presentation_is_valid(const PathAlgebra& pa, const PresMatrix& p, const IVec& dim) {
    for (int j = 0; j < pa.n; ++j) {
        i64 d = 0;
        for (int t : p.minus) d += pa.reach[t][j];
        for (int t : p.plus) d -= pa.reach[t][j];
        if (d != dim[j]) return false;
    }
    return injective_and_brick<Q>(pa, p) && injective_and_brick<ModP<2>>(pa, p) &&
           injective_and_brick<ModP<3>>(pa, p);
}

C2Model::C2Model(std::shared_ptr<const PresentationCatalog> cat) : cat_(cat), pa_(cat->q) {
    for (const auto& p : cat->items) {
        PresMatrix pm;
        pm.minus = expand(p.f_minus);
        pm.plus = expand(p.f_plus);
        pm.F = zeros(int(pm.minus.size()), int(pm.plus.size()));
        if (p.kind == PKind::Neutral) pm.F[0][0] = 1;
        if (p.kind == PKind::Module) {
            std::vector<std::pair<int, int>> pos;
            for (size_t r = 0; r < pm.minus.size(); ++r)
                for (size_t c = 0; c < pm.plus.size(); ++c)
                    if (pa_.allowed(pm.minus[r], pm.plus[c])) pos.push_back({int(r), int(c)});
            const IVec& dim = cat->ar.dims[p.module];
            int k = int(pos.size());
            bool found = false;
            // Densest candidates first; entries in {1, -1} on the nonzero positions.
            for (int zeros_allowed = 0; zeros_allowed <= k && !found; ++zeros_allowed) {
                std::vector<int> pick(k, 0);
                std::fill(pick.end() - zeros_allowed, pick.end(), 1);
                do {
                    std::vector<int> nz;
                    for (int t = 0; t < k; ++t)
                        if (!pick[t]) nz.push_back(t);
                    if (nz.size() > 20) throw Unsupported("presentation search too large");
                    for (unsigned signs = 0; signs < (1u << nz.size()) && !found; ++signs) {
                        for (auto& row : pm.F) std::fill(row.begin(), row.end(), 0);
                        for (size_t t = 0; t < nz.size(); ++t)
                            pm.F[pos[nz[t]].first][pos[nz[t]].second] = (signs >> t & 1) ? -1 : 1;
                        found = presentation_is_valid(pa_, pm, dim);
                    }
                } while (!found && std::next_permutation(pick.begin(), pick.end()));
            }
            require(found, "no presentation with entries in {0,1,-1} realizes " + p.label);
        }
        pres_.push_back(pm);
    }
}

std::vector<Morphism> C2Model::hom_basis(int f, int g) const {
    const auto& pf = pres_[f];
    const auto& pg = pres_[g];
    auto l = layout(pa_, pf, pg);
    auto eq = hom_equations(pa_, pf, pg, l);
    std::vector<Morphism> basis;
    for (const auto& v : nullspace(to_field<Q>(eq), l.size()))
        basis.push_back(unpack(pf, pg, l, primitive_integer(v)));
    return basis;
}

int C2Model::hom_dim_mod(int f, int g, int p) const {
    const auto& pf = pres_[f];
    const auto& pg = pres_[g];
    auto l = layout(pa_, pf, pg);
    auto eq = hom_equations(pa_, pf, pg, l);
    if (p == 2) return nullity<ModP<2>>(eq, l.size());
    if (p == 3) return nullity<ModP<3>>(eq, l.size());
    throw InvalidInput("only p = 2, 3 are supported");
}

Morphism C2Model::compose(int f, int g, int h, const Morphism& a, const Morphism& b) const {
    Morphism r;
    r.plus = mul(b.plus, a.plus, int(pres_[h].plus.size()), int(pres_[g].plus.size()), int(pres_[f].plus.size()));
    r.minus =
        mul(b.minus, a.minus, int(pres_[h].minus.size()), int(pres_[g].minus.size()), int(pres_[f].minus.size()));
    return r;
}

IrrMaps irreducible_morphisms(const C2Model& m, const IceQuiver& iq, BasisChoice choice) {
    require(iq.variant == Variant::Full2, "irreducible maps are chosen on the full2 quiver");
    const auto& cat = m.catalog();
    int nv = iq.size();
    IrrMaps irr;
    irr.choice = choice;
    irr.by_arrow.assign(iq.arrows.size(), Morphism{});

    std::vector<std::vector<int>> in(nv);
    std::vector<int> indeg(nv, 0);
    for (size_t k = 0; k < iq.arrows.size(); ++k) {
        const auto& a = iq.arrows[k];
        if (a.type == ArrowType::C) continue;
        in[a.dst].push_back(int(k));
        ++indeg[a.dst];
    }
    std::vector<int> order;
    for (int v = 0; v < nv; ++v)
        if (!indeg[v]) order.push_back(v);
    for (size_t h = 0; h < order.size(); ++h)
        for (size_t k = 0; k < iq.arrows.size(); ++k) {
            const auto& a = iq.arrows[k];
            if (a.type != ArrowType::C && a.src == order[h] && --indeg[a.dst] == 0) order.push_back(a.dst);
        }
    require(int(order.size()) == nv, "morphism arrows of the ice quiver contain a cycle");

    for (int y : order) {
        int cy = iq.verts[y];
        int ty = cat.tau[cy];
        if (ty < 0 || in[y].empty()) {
            for (int k : in[y]) {
                int cx = iq.verts[iq.arrows[k].src];
                auto basis = m.hom_basis(cx, cy);
                require(basis.size() == 1, "Hom along an arrow into a tau-free vertex is not one-dimensional");
                QVec v;
                for (auto x : flatten(basis[0])) v.push_back(Q(x));
                IVec w = normalized(v, choice);
                Morphism mo = basis[0];
                size_t pos = 0;
                for (auto& r : mo.plus)
                    for (auto& e : r) e = w[pos++];
                for (auto& r : mo.minus)
                    for (auto& e : r) e = w[pos++];
                irr.by_arrow[k] = mo;
            }
            continue;
        }
        // Mesh tau(y) -> x_k -> y: solve sum_k s_k beta_k alpha_k = 0.
        struct Term {
            int arrow, x;
            Morphism alpha;
            int sign;
            std::vector<Morphism> basis;
        };
        std::vector<Term> terms;
        int lt = iq.local[ty];
        for (int k : in[y]) {
            int x = iq.arrows[k].src;
            int alpha_arrow = -1;
            for (int j : in[x])
                if (iq.arrows[j].src == lt) alpha_arrow = j;
            require(alpha_arrow >= 0, "mesh is missing an arrow out of tau(y)");
            Term t;
            t.arrow = k;
            t.x = x;
            t.alpha = irr.by_arrow[alpha_arrow];
            require(!t.alpha.empty(), "source map of a mesh chosen out of order");
            t.sign = iq.arrows[alpha_arrow].type == ArrowType::B ? 1 : -1;
            t.basis = m.hom_basis(iq.verts[x], cy);
            terms.push_back(std::move(t));
        }
        std::vector<IVec> cols;
        for (const auto& t : terms)
            for (const auto& b : t.basis)
                cols.push_back(scale(flatten(m.compose(ty, iq.verts[t.x], cy, t.alpha, b)), t.sign));
        int rows = int(cols.front().size());
        IMat sys = zeros(rows, int(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < rows; ++r) sys[r][c] = cols[c][r];
        auto ns = nullspace(to_field<Q>(sys), int(cols.size()));
        require(ns.size() == 1, "mesh relation does not determine the sink map up to scalar");
        IVec coef = normalized(ns[0], choice);
        size_t pos = 0;
        for (const auto& t : terms) {
            Morphism beta = t.basis[0];
            for (auto& r : beta.plus) std::fill(r.begin(), r.end(), 0);
            for (auto& r : beta.minus) std::fill(r.begin(), r.end(), 0);
            bool nonzero = false;
            for (const auto& b : t.basis) {
                i64 c = coef[pos++];
                nonzero = nonzero || c;
                for (size_t i = 0; i < beta.plus.size(); ++i)
                    for (size_t j = 0; j < beta.plus[i].size(); ++j) beta.plus[i][j] += c * b.plus[i][j];
                for (size_t i = 0; i < beta.minus.size(); ++i)
                    for (size_t j = 0; j < beta.minus[i].size(); ++j) beta.minus[i][j] += c * b.minus[i][j];
            }
            require(nonzero, "sink map has a zero component");
            irr.by_arrow[t.arrow] = beta;
        }
    }
    return irr;
}

namespace {

// Span (as flattened vectors) of h o beta for h in Hom(f, z) and arrows z -> g, z != f.
IMat rad2_span(const C2Model& m, const IceQuiver& iq, const IrrMaps& irr, int f, int g, bool include_f) {
    IMat span;
    int lg = iq.local[g];
    for (size_t k = 0; k < iq.arrows.size(); ++k) {
        const auto& a = iq.arrows[k];
        if (a.type == ArrowType::C || a.dst != lg) continue;
        int z = iq.verts[a.src];
        if (z == f && !include_f) continue;
        if (z == f) {
            span.push_back(flatten(irr.by_arrow[k]));
            continue;
        }
        for (const auto& h : m.hom_basis(f, z)) span.push_back(flatten(m.compose(f, z, g, h, irr.by_arrow[k])));
    }
    return span;
}

}  // namespace

int irreducible_dim(const C2Model& m, const IceQuiver& iq, const IrrMaps& irr, int f, int g) {
    int hom = m.hom_dim(f, g);
    if (f == g) return 0;
    auto span = rad2_span(m, iq, irr, f, g, false);
    int r = span.empty() ? 0 : rank_q(span);
    return hom - r;
}

bool sink_maps_complete(const C2Model& m, const IceQuiver& iq, const IrrMaps& irr, int g) {
    for (int f = 0; f < m.size(); ++f) {
        if (f == g) continue;
        int hom = m.hom_dim(f, g);
        auto span = rad2_span(m, iq, irr, f, g, true);
        int r = span.empty() ? 0 : rank_q(span);
        if (r != hom) return false;
    }
    return true;
}

int RepZ::total() const {
    i64 t = 0;
    for (auto d : dims) t += d;
    return int(t);
}

IVec tv_dimension(const IceQuiver& iq, int v) {
    const auto& cat = *iq.cat;
    const auto& pv = cat.items[v];
    int i = pv.vertex;
    IVec dims;
    for (int k = 0; k < iq.size(); ++k) {
        const auto& p = iq.item(k);
        switch (pv.kind) {
            case PKind::Negative:
                dims.push_back(p.e_vec.empty() ? 0 : p.e_vec[cat.star[i]]);
                break;
            case PKind::Positive: dims.push_back(p.f_plus[i]); break;
            case PKind::Neutral: dims.push_back(p.f_minus[i]); break;
            default: throw InvalidInput("T_v is defined only for frozen vertices");
        }
    }
    return dims;
}

RepZ build_tv(const C2Model& m, const IceQuiver& iq, const IrrMaps& irr, int v) {
    const auto& cat = m.catalog();
    const auto& pv = cat.items[v];
    int i = pv.vertex;
    RepZ t;
    t.dims = tv_dimension(iq, v);
    for (size_t k = 0; k < iq.arrows.size(); ++k) {
        const auto& a = iq.arrows[k];
        int ds = int(t.dims[a.src]), dd = int(t.dims[a.dst]);
        IMat mat = zeros(dd, ds);
        if (ds && dd) {
            if (pv.kind == PKind::Negative) {
                if (a.type == ArrowType::C) {
                    require(ds == 1 && dd == 1, "T of a negative vertex is not thin");
                    mat[0][0] = 1;
                }
            } else if (a.type != ArrowType::C) {
                const Morphism& mo = irr.by_arrow[k];
                bool plus = pv.kind == PKind::Positive;
                const auto& src = plus ? m.pres(iq.verts[a.src]).plus : m.pres(iq.verts[a.src]).minus;
                const auto& dst = plus ? m.pres(iq.verts[a.dst]).plus : m.pres(iq.verts[a.dst]).minus;
                const IMat& full = plus ? mo.plus : mo.minus;
                int r = 0;
                for (size_t a2 = 0; a2 < dst.size(); ++a2) {
                    if (dst[a2] != i) continue;
                    int c = 0;
                    for (size_t b2 = 0; b2 < src.size(); ++b2) {
                        if (src[b2] != i) continue;
                        mat[r][c++] = full[a2][b2];
                    }
                    ++r;
                }
            }
        }
        t.arrows.push_back({a.src, a.dst});
        t.mats.push_back(mat);
    }
    return t;
}

bool satisfies_mesh_relations(const IceQuiver& iq, const RepZ& t) {
    const auto& cat = *iq.cat;
    for (int y = 0; y < iq.size(); ++y) {
        int ty = cat.tau[iq.verts[y]];
        if (ty < 0) continue;
        int lt = iq.local[ty];
        if (lt < 0) continue;
        int rows = int(t.dims[y]), cols = int(t.dims[lt]);
        IMat sum = zeros(rows, cols);
        for (size_t k = 0; k < iq.arrows.size(); ++k) {
            const auto& b = iq.arrows[k];
            if (b.dst != y || b.type == ArrowType::C) continue;
            for (size_t j = 0; j < iq.arrows.size(); ++j) {
                const auto& a = iq.arrows[j];
                if (a.src != lt || a.dst != b.src || a.type == ArrowType::C) continue;
                int sign = a.type == ArrowType::A ? 1 : -1;
                auto prod = mul(t.mats[k], t.mats[j], rows, int(t.dims[b.src]), cols);
                for (int r = 0; r < rows; ++r)
                    for (int c = 0; c < cols; ++c) sum[r][c] += sign * prod[r][c];
            }
        }
        for (const auto& r : sum)
            if (!is_zero(r)) return false;
    }
    return true;
}

}  // namespace iart
