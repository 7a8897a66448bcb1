#include "iart/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "iart/lp.hpp"
#include "iart/mutation.hpp"

namespace iart {

namespace {

// All subspaces of F_p^d, each with a basis and a membership table over the p^d vectors.
struct Subspace {
    int dim = 0;
    std::vector<IVec> basis;
    std::vector<char> member;
};

int encode(const IVec& v, int p) {
    int code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * p + int(*it);
    return code;
}

std::vector<Subspace> all_subspaces(int d, int p) {
    int total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    std::vector<Subspace> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> piv;
        for (int c = 0; c < d; ++c)
            if (mask >> c & 1) piv.push_back(c);
        int k = int(piv.size());
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < d; ++c)
                if (!(mask >> c & 1)) free.push_back({r, c});
        int combos = 1;
        for (size_t i = 0; i < free.size(); ++i) combos *= p;
        for (int code = 0; code < combos; ++code) {
            Subspace s;
            s.dim = k;
            s.basis.assign(k, IVec(d, 0));
            for (int r = 0; r < k; ++r) s.basis[r][piv[r]] = 1;
            int x = code;
            for (auto [r, c] : free) {
                s.basis[r][c] = x % p;
                x /= p;
            }
            s.member.assign(total, 0);
            int spans = 1;
            for (int r = 0; r < k; ++r) spans *= p;
            for (int cc = 0; cc < spans; ++cc) {
                IVec v(d, 0);
                int y = cc;
                for (int r = 0; r < k; ++r) {
                    int a = y % p;
                    y /= p;
                    for (int j = 0; j < d; ++j) v[j] = (v[j] + a * s.basis[r][j]) % p;
                }
                s.member[encode(v, p)] = 1;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

IVec apply_mod(const IMat& m, const IVec& v, int p) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        i64 s = 0;
        for (size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
        r[i] = ((s % p) + p) % p;
    }
    return r;
}

}  // namespace

std::set<IVec> subreps_bruteforce(const RepZ& t, int p, int cap) {
    if (t.total() > cap)
        throw Unsupported("total dimension " + std::to_string(t.total()) + " exceeds the brute-force cap " +
                          std::to_string(cap) + "; use the F-polynomial route");
    int nv = int(t.dims.size());
    std::map<int, std::vector<Subspace>> spaces;
    std::vector<int> support;
    for (int v = 0; v < nv; ++v)
        if (t.dims[v] > 0) {
            support.push_back(v);
            if (!spaces.count(int(t.dims[v]))) spaces[int(t.dims[v])] = all_subspaces(int(t.dims[v]), p);
        }
    // Greedy order: next vertex has the most arrows to already placed vertices.
    std::vector<int> order;
    std::vector<char> placed(nv, 0);
    while (order.size() < support.size()) {
        int best = -1, score = -1;
        for (int v : support) {
            if (placed[v]) continue;
            int s = 0;
            for (auto [a, b] : t.arrows) s += (a == v && placed[b]) || (b == v && placed[a]);
            if (s > score) {
                score = s;
                best = v;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> rank_of(nv, -1);
    for (size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = int(k);
    // Arrows checked when their later endpoint is placed.
    std::vector<std::vector<int>> checks(order.size());
    for (size_t k = 0; k < t.arrows.size(); ++k) {
        auto [a, b] = t.arrows[k];
        if (rank_of[a] < 0 || rank_of[b] < 0) continue;
        checks[std::max(rank_of[a], rank_of[b])].push_back(int(k));
    }
    std::vector<int> choice(nv, -1);
    std::set<IVec> found;
    auto sub = [&](int v) -> const Subspace& { return spaces[int(t.dims[v])][choice[v]]; };
    auto ok = [&](int k) {
        auto [a, b] = t.arrows[k];
        const auto& sa = sub(a);
        const auto& sb = sub(b);
        for (const auto& bv : sa.basis)
            if (!sb.member[encode(apply_mod(t.mats[k], bv, p), p)]) return false;
        return true;
    };
    std::function<void(size_t)> dfs = [&](size_t depth) {
        if (depth == order.size()) {
            IVec dim(nv, 0);
            for (int v : support) dim[v] = sub(v).dim;
            if (!is_zero(dim)) found.insert(dim);
            return;
        }
        int v = order[depth];
        const auto& list = spaces[int(t.dims[v])];
        for (size_t s = 0; s < list.size(); ++s) {
            choice[v] = int(s);
            bool good = true;
            for (int k : checks[depth])
                if (!ok(k)) {
                    good = false;
                    break;
                }
            if (good) dfs(depth + 1);
        }
        choice[v] = -1;
    };
    dfs(0);
    return found;
}

std::set<IVec> TvSubreps::strict() const {
    std::set<IVec> s(all);
    s.erase(full);
    return s;
}

IMat ConeSpec::H() const {
    IMat h = zeros(int(ambient.size()), int(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < ambient.size(); ++r) h[r][c] = columns[c].h[r];
    return h;
}

std::vector<std::string> ConeSpec::header(const PresentationCatalog& cat) const {
    std::vector<std::string> out;
    for (const auto& c : columns) out.push_back(cat.items[c.frozen].label);
    return out;
}

ConeInputs prepare_cone_inputs(const ValuedQuiver& q, SubrepSource src, BasisChoice choice) {
    if (!q.simply_laced()) throw Unsupported("cones are only constructed for simply-laced types");
    ConeInputs in;
    in.cat = std::make_shared<const PresentationCatalog>(enumerate_presentations(q));
    in.model = std::make_shared<const C2Model>(in.cat);
    in.full2 = build_ice_quiver(in.cat, Variant::Full2);
    in.irr = irreducible_morphisms(*in.model, in.full2, choice);
    const auto& cat = *in.cat;

    std::map<int, std::set<IVec>> fpoly;
    if (src != SubrepSource::BruteForce) {
        for (int i = 0; i < q.n; ++i) {
            auto r = tv_subreps_via_fpoly(in.full2, i);
            if (!r.precondition) throw Unsupported("mu_l(B) != pi^2(B); fall back to brute force");
            fpoly[cat.neg[i]] = r.negative;
            fpoly[cat.neu[cat.star[i]]] = r.neutral;
            fpoly[cat.pos[i]] = r.positive;
        }
    }
    for (int v = 0; v < cat.size(); ++v) {
        if (!cat.items[v].frozen()) continue;
        TvSubreps ts;
        ts.v = v;
        ts.full = tv_dimension(in.full2, v);
        if (src != SubrepSource::FPoly) {
            auto t = build_tv(*in.model, in.full2, in.irr, v);
            require(t.dims == ts.full, "T_v dimension vector differs from theta_v");
            auto s2 = subreps_bruteforce(t, 2);
            auto s3 = subreps_bruteforce(t, 3);
            require(s2 == s3, "subrepresentations over F_2 and F_3 differ for " + cat.items[v].label);
            ts.all = s2;
        }
        if (src != SubrepSource::BruteForce) {
            std::set<IVec> withfull = fpoly[v];
            withfull.insert(ts.full);
            if (src == SubrepSource::Both)
                require(withfull == ts.all, "F-polynomial and brute-force subrepresentations differ for " +
                                                cat.items[v].label);
            ts.all = withfull;
        }
        in.tv.push_back(std::move(ts));
    }
    return in;
}

namespace {

int group_of(PKind k) { return k == PKind::Negative ? 0 : k == PKind::Neutral ? 1 : 2; }

bool group_used(Variant v, int g) {
    switch (v) {
        case Variant::Full2: return true;
        case Variant::U: return g == 0;
        case Variant::Sharp: return g == 0 || g == 2;
        case Variant::L: return g == 1;
        case Variant::R: return g == 2;
    }
    return false;
}

}  // namespace

ConeSpec assemble_cone(const ConeInputs& in, Variant variant) {
    const auto& cat = *in.cat;
    auto iq = build_ice_quiver(in.cat, variant);
    ConeSpec c;
    c.variant = variant;
    c.ambient = iq.verts;
    std::vector<int> local(cat.size(), -1);
    for (size_t k = 0; k < c.ambient.size(); ++k) local[c.ambient[k]] = int(k);
    auto restrict_to = [&](const IVec& full) {
        IVec r(c.ambient.size(), 0);
        for (size_t k = 0; k < c.ambient.size(); ++k) r[k] = full[in.full2.local[c.ambient[k]]];
        return r;
    };
    for (int g = 0; g < 3; ++g) {
        if (!group_used(variant, g)) continue;
        for (const auto& ts : in.tv) {
            if (group_of(cat.items[ts.v].kind) != g) continue;
            std::set<IVec> cols;
            for (const auto& s : ts.strict()) cols.insert(restrict_to(s));
            if (variant != Variant::Full2) {
                // Completion: keep the full vector when a top vertex of T_v was deleted.
                bool top_deleted = false;
                for (int w = 0; w < in.full2.size(); ++w) {
                    if (!ts.full[w] || local[in.full2.verts[w]] >= 0) continue;
                    IVec rest(ts.full);
                    rest[w] = 0;
                    if (is_zero(rest) || ts.all.count(rest)) top_deleted = true;
                }
                if (top_deleted) cols.insert(restrict_to(ts.full));
            }
            for (const auto& h : cols)
                if (!is_zero(h)) c.columns.push_back({ts.v, g, h});
        }
    }
    return c;
}

ConeSpec prune_redundant(const ConeSpec& c) {
    int n = int(c.ambient.size());
    std::vector<bool> keep(c.columns.size(), true);
    for (size_t k = 0; k < c.columns.size(); ++k) {
        QMat A;
        QVec b;
        for (size_t j = 0; j < c.columns.size(); ++j) {
            if (j == k || !keep[j]) continue;
            QVec row;
            for (auto x : c.columns[j].h) row.push_back(Q(x));
            A.push_back(row);
            b.push_back(0);
        }
        for (int i = 0; i < n; ++i) {
            QVec up(n, Q(0)), dn(n, Q(0));
            up[i] = 1;
            dn[i] = -1;
            A.push_back(up);
            b.push_back(-1);
            A.push_back(dn);
            b.push_back(-1);
        }
        QVec obj;
        for (auto x : c.columns[k].h) obj.push_back(Q(x));
        auto r = lp_minimize(A, b, obj);
        require(r.status == LPStatus::Optimal, "redundancy LP over a box must be optimal");
        if (sgn(r.value) >= 0) keep[k] = false;
    }
    ConeSpec out = c;
    out.columns.clear();
    for (size_t k = 0; k < c.columns.size(); ++k)
        if (keep[k]) out.columns.push_back(c.columns[k]);
    return out;
}

}  // namespace iart
