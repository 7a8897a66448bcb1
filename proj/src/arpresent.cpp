#include "iart/arpresent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace iart {

namespace {

// Vertices ordered so that j comes before i whenever i -> j.
std::vector<int> sinks_first(const ValuedQuiver& q) {
    std::vector<int> outdeg(q.n, 0), order;
    for (const auto& a : q.arrows) ++outdeg[a.src];
    std::vector<bool> done(q.n, false);
    while (int(order.size()) < q.n) {
        bool progress = false;
        for (int v = 0; v < q.n; ++v) {
            if (done[v] || outdeg[v]) continue;
            done[v] = true;
            progress = true;
            order.push_back(v);
            for (const auto& a : q.arrows)
                if (a.dst == v) --outdeg[a.src];
        }
        if (!progress) throw InvalidInput("quiver has an oriented cycle");
    }
    return order;
}

}  // namespace

int ARQuiver::find(const IVec& dim) const {
    for (int m = 0; m < size(); ++m)
        if (dims[m] == dim) return m;
    return -1;
}

std::vector<std::pair<int, i64>> ARQuiver::mesh(int m) const {
    std::vector<std::pair<int, i64>> mid;
    for (const auto& a : arrows)
        if (a.dst == m) mid.push_back({a.src, a.a});
    return mid;
}

ARQuiver knit_rep_ar(const ValuedQuiver& q, int cap) {
    ARQuiver ar;
    ar.q = q;
    int n = q.n;
    auto order = sinks_first(q);

    std::vector<IVec> inj(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        inj[i] = unit(n, i);
        for (const auto& a : q.arrows)
            if (a.dst == i) inj[i] = add(inj[i], scale(inj[a.src], a.c_sd));
    }

    auto push = [&](const IVec& dim, int orbit, int level, int tau) {
        ar.dims.push_back(dim);
        ar.orbit.push_back(orbit);
        ar.level.push_back(level);
        ar.tau.push_back(tau);
        ar.tau_inv.push_back(-1);
        ar.dring.push_back(q.d[orbit]);
        if (tau >= 0) ar.tau_inv[tau] = ar.size() - 1;
        return ar.size() - 1;
    };

    std::vector<int> cur(n, -1);
    ar.projective.assign(n, -1);
    for (int j : order) {
        IVec dim = unit(n, j);
        for (const auto& a : q.arrows)
            if (a.src == j) dim = add(dim, scale(ar.dims[cur[a.dst]], a.c_ds));
        cur[j] = push(dim, j, 0, -1);
        ar.projective[j] = cur[j];
        for (const auto& a : q.arrows)
            if (a.src == j) ar.arrows.push_back({cur[a.dst], cur[j], a.c_ds, a.c_sd});
    }

    for (int level = 1;; ++level) {
        std::vector<int> next(n, -1);
        bool any = false;
        for (int j : order) {
            int x = cur[j];
            if (x < 0) continue;
            bool injective = false;
            for (int i = 0; i < n; ++i)
                if (inj[i] == ar.dims[x]) injective = true;
            if (injective) continue;
            IVec v = scale(ar.dims[x], -1);
            for (const auto& a : q.arrows) {
                if (a.dst == j && cur[a.src] >= 0) v = add(v, scale(ar.dims[cur[a.src]], a.c_sd));
                if (a.src == j && next[a.dst] >= 0) v = add(v, scale(ar.dims[next[a.dst]], a.c_ds));
            }
            if (!is_nonneg(v) || is_zero(v))
                throw InvariantViolation("knitting produced a non-positive dimension vector at a non-injective module");
            if (ar.size() >= cap) throw InvalidInput("knitting did not terminate: quiver is not of Dynkin type");
            int y = push(v, j, level, x);
            next[j] = y;
            any = true;
            for (const auto& a : q.arrows) {
                if (a.dst == j && cur[a.src] >= 0) ar.arrows.push_back({cur[a.src], y, a.c_sd, a.c_ds});
                if (a.src == j && next[a.dst] >= 0) ar.arrows.push_back({next[a.dst], y, a.c_ds, a.c_sd});
            }
        }
        cur = next;
        if (!any) break;
    }

    ar.injective.assign(n, -1);
    ar.simple.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        ar.injective[i] = ar.find(inj[i]);
        ar.simple[i] = ar.find(unit(n, i));
        require(ar.injective[i] >= 0 && ar.simple[i] >= 0, "knitting missed an injective or simple module");
        require(ar.tau_inv[ar.injective[i]] < 0, "injective module has a tau-inverse");
    }
    for (int m = 0; m < ar.size(); ++m) {
        if (ar.tau[m] < 0) continue;
        IVec s = add(ar.dims[m], ar.dims[ar.tau[m]]);
        IVec mid(n, 0);
        for (auto [x, mult] : ar.mesh(m)) mid = add(mid, scale(ar.dims[x], mult));
        require(s == mid, "mesh additivity");
    }
    return ar;
}

IMat hom_dim_table(const ARQuiver& ar) {
    int m = ar.size();
    IMat h = zeros(m, m);
    for (int x = 0; x < m; ++x)
        for (int nn = 0; nn < m; ++nn) {
            i64 v = 0;
            for (auto [y, mult] : ar.mesh(nn)) v += mult * h[x][y];
            if (ar.tau[nn] >= 0) v -= h[x][ar.tau[nn]];
            if (x == nn) v += ar.dring[nn];
            require(v >= 0, "negative Hom dimension in recursion");
            h[x][nn] = v;
        }
    return h;
}

bool euler_form_consistent(const ARQuiver& ar, const IMat& hom, const IMat& euler) {
    for (int a = 0; a < ar.size(); ++a)
        for (int b = 0; b < ar.size(); ++b) {
            i64 ext = ar.tau[a] >= 0 ? hom[b][ar.tau[a]] : 0;
            if (hom[a][b] - ext != dot(vecmat(ar.dims[a], euler), ar.dims[b])) return false;
        }
    return true;
}

IVec Presentation::triple() const {
    IVec t(e_vec);
    t.insert(t.end(), f_minus.begin(), f_minus.end());
    t.insert(t.end(), f_plus.begin(), f_plus.end());
    return t;
}

int PresentationCatalog::find_by_weights(const IVec& fm, const IVec& fp) const {
    for (int k = 0; k < size(); ++k)
        if (items[k].f_minus == fm && items[k].f_plus == fp) return k;
    return -1;
}

PresentationCatalog enumerate_presentations(const ValuedQuiver& q) {
    PresentationCatalog cat;
    cat.q = q;
    cat.cd = cartan_data(q);
    cat.ar = knit_rep_ar(q);
    cat.hom = hom_dim_table(cat.ar);
    require(euler_form_consistent(cat.ar, cat.hom, cat.cd.euler), "Hom - Ext disagrees with the Euler form");
    const auto& ar = cat.ar;
    int n = q.n, m = ar.size();

    cat.neg.assign(n, -1);
    for (int x = 0; x < m; ++x) {
        Presentation p;
        p.module = x;
        p.dring = ar.dring[x];
        if (ar.tau[x] < 0) {
            p.kind = PKind::Negative;
            p.vertex = ar.orbit[x];
            p.f_minus = unit(n, p.vertex);
            p.f_plus = IVec(n, 0);
            cat.neg[p.vertex] = x;
        } else {
            p.kind = PKind::Module;
            p.f_minus.assign(n, 0);
            IVec fp(n, 0);
            for (int i = 0; i < n; ++i) {
                i64 top = cat.hom[x][ar.simple[i]];
                i64 ext = cat.hom[ar.simple[i]][ar.tau[x]];
                require(top % q.d[i] == 0 && ext % q.d[i] == 0, "top/ext multiplicity not divisible by d_i");
                p.f_minus[i] = top / q.d[i];
                fp[i] = ext / q.d[i];
            }
            p.f_plus = add(p.f_minus, scale(vecmat(ar.dims[x], cat.cd.El), -1));
            require(p.f_plus == fp, "f_+ from the reduced weight disagrees with Ext multiplicities");
        }
        cat.items.push_back(p);
    }
    cat.pos.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Presentation p;
        p.kind = PKind::Positive;
        p.vertex = i;
        p.dring = q.d[i];
        p.f_minus = IVec(n, 0);
        p.f_plus = unit(n, i);
        cat.pos[i] = int(cat.items.size());
        cat.items.push_back(p);
    }
    cat.neu.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Presentation p;
        p.kind = PKind::Neutral;
        p.vertex = i;
        p.dring = q.d[i];
        p.f_minus = unit(n, i);
        p.f_plus = unit(n, i);
        p.e_vec = IVec(n, 0);
        cat.neu[i] = int(cat.items.size());
        cat.items.push_back(p);
    }

    int total = cat.size();
    cat.tau.assign(total, -1);
    cat.tau_inv.assign(total, -1);
    for (int x = 0; x < m; ++x)
        if (ar.tau[x] >= 0) cat.tau[x] = ar.tau[x];
    for (int i = 0; i < n; ++i) cat.tau[cat.pos[i]] = ar.injective[i];
    for (int k = 0; k < total; ++k)
        if (cat.tau[k] >= 0) {
            require(cat.tau_inv[cat.tau[k]] < 0, "tau is not injective on the catalog");
            cat.tau_inv[cat.tau[k]] = k;
        }

    cat.orbits.assign(n, {});
    cat.tmax.assign(n, 0);
    cat.star.assign(n, -1);
    std::vector<bool> seen(total, false);
    for (int i = 0; i < n; ++i) {
        int k = cat.pos[i];
        for (int t = 0; k >= 0; ++t, k = cat.tau[k]) {
            require(!seen[k], "tau-orbits overlap");
            seen[k] = true;
            cat.orbits[i].push_back(k);
            auto& p = cat.items[k];
            p.orbit_i = i;
            p.orbit_t = t;
            p.e_vec = unit(n, i);
        }
        int last = cat.orbits[i].back();
        require(cat.items[last].kind == PKind::Negative, "tau-orbit does not end at a negative presentation");
        cat.tmax[i] = int(cat.orbits[i].size()) - 1;
        cat.star[i] = cat.items[last].vertex;
        for (int t = 0; t <= cat.tmax[i]; ++t) {
            auto& p = cat.items[cat.orbits[i][t]];
            p.dual_i = cat.star[i];
            p.dual_t = cat.tmax[i] - t;
        }
    }
    for (int k = 0; k < total; ++k)
        require(seen[k] == (cat.items[k].kind != PKind::Neutral), "orbits do not partition the non-neutral objects");

    for (auto& p : cat.items) {
        switch (p.kind) {
            case PKind::Negative: p.label = "O-" + std::to_string(p.vertex + 1); break;
            case PKind::Positive: p.label = "O+" + std::to_string(p.vertex + 1); break;
            case PKind::Neutral: p.label = "Id" + std::to_string(p.vertex + 1); break;
            case PKind::Module:
                p.label = "(" + std::to_string(p.orbit_i + 1) + "," + std::to_string(p.orbit_t) + ")";
                break;
        }
    }

    auto order = sinks_first(q);
    cat.topo_rank.assign(n, 0);
    for (int k = 0; k < n; ++k) cat.topo_rank[order[k]] = n - 1 - k;
    return cat;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Full2: return "full2";
        case Variant::U: return "u";
        case Variant::Sharp: return "sharp";
        case Variant::L: return "l";
        case Variant::R: return "r";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    for (auto v : {Variant::Full2, Variant::U, Variant::Sharp, Variant::L, Variant::R})
        if (variant_name(v) == s) return v;
    throw InvalidInput("unknown variant '" + s + "' (expected full2, u, sharp, l, r)");
}

namespace {

bool keeps(Variant v, PKind k) {
    switch (v) {
        case Variant::Full2: return true;
        case Variant::U: return k == PKind::Module || k == PKind::Negative;
        case Variant::Sharp: return k != PKind::Neutral;
        case Variant::L: return k == PKind::Module || k == PKind::Neutral;
        case Variant::R: return k == PKind::Module || k == PKind::Positive;
    }
    return false;
}

ArrowType classify(const PresentationCatalog& cat, int s, int t) {
    const auto& ps = cat.items[s];
    const auto& pt = cat.items[t];
    if (pt.kind == PKind::Neutral) return ArrowType::A;
    if (ps.kind == PKind::Neutral) return ArrowType::B;
    if (pt.dual_t == ps.dual_t + 1) return ArrowType::A;
    require(pt.dual_t == ps.dual_t, "morphism arrow neither type A nor type B");
    return ArrowType::B;
}

}  // namespace

IMat IceQuiver::bmat() const {
    IMat r;
    for (int u : mut) r.push_back(bfull[u]);
    return r;
}

IceQuiver build_ice_quiver(std::shared_ptr<const PresentationCatalog> catp, Variant v) {
    const auto& cat = *catp;
    const auto& ar = cat.ar;
    const auto& q = cat.q;

    struct Raw {
        int s, t;
        i64 a, b;
        bool translation;
    };
    std::vector<Raw> raw;
    for (const auto& a : ar.arrows) raw.push_back({a.src, a.dst, a.a, a.b, false});
    for (int x = 0; x < ar.size(); ++x)
        if (ar.tau[x] >= 0) raw.push_back({x, ar.tau[x], 1, 1, true});
    for (const auto& a : q.arrows) {
        int i = a.src, j = a.dst;
        raw.push_back({cat.pos[j], cat.pos[i], a.c_ds, a.c_sd, false});
        raw.push_back({ar.injective[i], cat.pos[j], a.c_sd, a.c_ds, false});
    }
    for (int i = 0; i < q.n; ++i) {
        raw.push_back({cat.pos[i], ar.injective[i], 1, 1, true});
        int s = ar.simple[i];
        raw.push_back({s, cat.neu[i], 1, 1, false});
        int up = ar.tau_inv[s] >= 0 ? ar.tau_inv[s] : cat.pos[i];
        raw.push_back({cat.neu[i], up, 1, 1, false});
    }

    IceQuiver iq;
    iq.cat = catp;
    iq.variant = v;
    iq.local.assign(cat.size(), -1);
    for (int k = 0; k < cat.size(); ++k)
        if (keeps(v, cat.items[k].kind)) {
            iq.local[k] = int(iq.verts.size());
            iq.verts.push_back(k);
            iq.frozen.push_back(cat.items[k].frozen());
            if (!cat.items[k].frozen()) iq.mut.push_back(iq.local[k]);
        }
    int nv = iq.size();
    iq.bfull = zeros(nv, nv);
    for (const auto& r : raw) {
        int s = iq.local[r.s], t = iq.local[r.t];
        if (s < 0 || t < 0) continue;
        IceArrow e;
        e.src = s;
        e.dst = t;
        e.a = r.a;
        e.b = r.b;
        e.type = r.translation ? ArrowType::C : classify(cat, r.s, r.t);
        iq.arrows.push_back(e);
        iq.bfull[s][t] += r.b;
        iq.bfull[t][s] -= r.a;
    }
    i64 l = 1;
    for (int k : iq.verts) l = std::lcm(l, cat.items[k].dring);
    for (int k : iq.verts) iq.symmetrizer.push_back(l / cat.items[k].dring);
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            require(iq.symmetrizer[x] * iq.bfull[x][y] == -iq.symmetrizer[y] * iq.bfull[y][x],
                    "exchange matrix is not skew-symmetrizable");
    return iq;
}

WeightConfig weight_configuration(const IceQuiver& iq) {
    WeightConfig wc;
    for (int k = 0; k < iq.size(); ++k) {
        const auto& p = iq.item(k);
        IVec row;
        switch (iq.variant) {
            case Variant::Full2: row = p.triple(); break;
            case Variant::U: row = add(p.e_vec, sub(p.f_minus, p.f_plus)); break;
            case Variant::Sharp:
                row = p.e_vec;
                for (auto x : p.reduced()) row.push_back(x);
                break;
            default: throw Unsupported("no grading is defined for variant " + variant_name(iq.variant));
        }
        wc.sigma.push_back(row);
    }
    wc.label = iq.variant == Variant::Full2 ? "triple" : iq.variant == Variant::U ? "single" : "double";
    require(annihilates(iq.bmat(), wc.sigma), "B * sigma != 0");
    return wc;
}

bool annihilates(const IMat& b, const IMat& sigma) {
    for (const auto& row : matmul(b, sigma))
        if (!is_zero(row)) return false;
    return true;
}

}  // namespace iart
