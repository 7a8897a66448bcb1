#include "iart/mutation.hpp"

#include <algorithm>

#include "iart/pathalg.hpp"

namespace iart {

namespace {

i64 pos_part(i64 x) { return x > 0 ? x : 0; }
int sign_of(i64 x) { return (x > 0) - (x < 0); }

using Laurent = std::map<i64, Z>;  // univariate, exponent -> coefficient

void trim(Laurent& p) {
    for (auto it = p.begin(); it != p.end();)
        it = it->second == 0 ? p.erase(it) : std::next(it);
}

Laurent times_one_plus(const Laurent& p) {
    Laurent r;
    for (const auto& [e, c] : p) {
        r[e] += c;
        r[e + 1] += c;
    }
    trim(r);
    return r;
}

// Exact division by (1 + y); throws if not divisible.
Laurent div_one_plus(const Laurent& p) {
    if (p.empty()) return p;
    i64 lo = p.begin()->first, hi = p.rbegin()->first;
    require(hi > lo, "F-polynomial mutation: (1+y_u) does not divide");
    std::vector<Z> a(size_t(hi - lo + 1));
    for (const auto& [e, c] : p) a[size_t(e - lo)] = c;
    std::vector<Z> q(a.size() - 1);
    q[0] = a[0];
    for (size_t j = 1; j < q.size(); ++j) q[j] = a[j] - q[j - 1];
    require(a.back() == q.back(), "F-polynomial mutation: (1+y_u) does not divide");
    Laurent r;
    for (size_t j = 0; j < q.size(); ++j)
        if (q[j] != 0) r[lo + i64(j)] = q[j];
    return r;
}

}  // namespace

IMat mutate_b(const IMat& b, int u) {
    int n = int(b.size());
    IMat r = b;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == u || w == u)
                r[v][w] = -b[v][w];
            else
                r[v][w] = b[v][w] + sign_of(b[v][u]) * std::max<i64>(0, b[v][u] * b[u][w]);
        }
    return r;
}

IMat mutate_b_checked(const IMat& b, const std::vector<bool>& frozen, int u) {
    if (u < 0 || u >= int(b.size()) || frozen[u]) throw InvalidInput("mutation at a frozen or unknown vertex");
    return mutate_b(b, u);
}

IMat mutate_sequence(IMat b, const std::vector<int>& seq) {
    for (int u : seq) b = mutate_b(b, u);
    return b;
}

IVec mutate_g(const IVec& g, const IMat& b, int u) {
    IVec r = g;
    for (size_t v = 0; v < g.size(); ++v) {
        if (int(v) == u) {
            r[v] = -g[u];
            continue;
        }
        i64 bv = b[v][u];
        r[v] = g[v] + bv * (bv >= 0 ? pos_part(g[u]) : pos_part(-g[u]));
    }
    return r;
}

DualTracked mutate_dual_state(const DualTracked& s, const IMat& b, int u) {
    int n = int(s.gdual.size());
    i64 beta = pos_part(-s.gdual[u]);
    i64 beta_new = pos_part(s.gdual[u]);

    DualTracked out;
    out.gdual.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == u) {
            out.gdual[v] = -s.gdual[u];
            continue;
        }
        i64 bv = b[v][u];
        out.gdual[v] = s.gdual[v] + pos_part(-bv) * s.gdual[u] - bv * beta;
    }

    // F'(y') = (1+y'_u)^{beta'-beta} y'_u^{beta} F(y) with y_u = 1/y'_u and
    // y_v = y'_v y'_u^{[b_uv]_+} (1+y'_u)^{-b_uv}.
    struct Term {
        i64 a, k;
        Z c;
    };
    std::map<IVec, std::vector<Term>> groups;
    for (const auto& [e, c] : s.fpoly) {
        i64 a = beta - e[u], k = beta_new - beta;
        for (int v = 0; v < n; ++v) {
            if (v == u || !e[v]) continue;
            a += e[v] * pos_part(b[u][v]);
            k -= e[v] * b[u][v];
        }
        IVec rest = e;
        rest[u] = 0;
        groups[rest].push_back({a, k, c});
    }
    for (auto& [rest, terms] : groups) {
        i64 kmin = terms[0].k;
        for (const auto& t : terms) kmin = std::min(kmin, t.k);
        Laurent sum;
        for (const auto& t : terms) {
            Laurent p{{t.a, t.c}};
            for (i64 j = 0; j < t.k - kmin; ++j) p = times_one_plus(p);
            for (const auto& [e, c] : p) sum[e] += c;
        }
        trim(sum);
        for (i64 j = 0; j < kmin; ++j) sum = times_one_plus(sum);
        for (i64 j = 0; j < -kmin; ++j) sum = div_one_plus(sum);
        for (const auto& [e, c] : sum) {
            require(e >= 0, "F-polynomial mutation produced a negative exponent");
            require(c > 0, "F-polynomial mutation produced a non-positive coefficient");
            IVec mono = rest;
            mono[u] = e;
            out.fpoly[mono] += c;
        }
    }
    auto it = out.fpoly.find(IVec(n, 0));
    require(it != out.fpoly.end() && it->second == 1, "mutated F-polynomial must have constant term 1");
    return out;
}

MuSequences mu_sequences(const IceQuiver& iq) {
    require(iq.variant == Variant::Full2, "mutation sequences are defined on the full2 ice quiver");
    const auto& cat = *iq.cat;
    int n = cat.q.n;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cat.topo_rank[a] < cat.topo_rank[b]; });
    auto loc = [&](int i, int t) { return iq.local[cat.orbits[i][t]]; };

    MuSequences ms;
    int tmax = *std::max_element(cat.tmax.begin(), cat.tmax.end());
    for (int t = 1; t < tmax; ++t)
        for (int i : order) {
            if (t >= cat.tmax[i]) continue;
            for (int s = 1; s <= cat.tmax[i] - t; ++s) ms.sqrt_l.push_back(loc(i, s));
        }

    int nv = iq.size();
    ms.pi.assign(nv, -1);
    for (int i = 0; i < n; ++i) {
        for (int t = 1; t < cat.tmax[i]; ++t) ms.pi[loc(i, t)] = loc(i, cat.tmax[i] - t);
        ms.pi[iq.local[cat.neg[i]]] = iq.local[cat.neu[i]];
        ms.pi[iq.local[cat.pos[i]]] = iq.local[cat.neg[cat.star[i]]];
        ms.pi[iq.local[cat.neu[i]]] = iq.local[cat.pos[i]];
    }
    for (int v = 0; v < nv; ++v) require(ms.pi[v] >= 0, "pi must be defined on every vertex");
    ms.pi2.assign(nv, -1);
    ms.pi_inv.assign(nv, -1);
    ms.pi2_inv.assign(nv, -1);
    for (int v = 0; v < nv; ++v) ms.pi2[v] = ms.pi[ms.pi[v]];
    for (int v = 0; v < nv; ++v) {
        ms.pi_inv[ms.pi[v]] = v;
        ms.pi2_inv[ms.pi2[v]] = v;
    }

    ms.l = ms.sqrt_l;
    for (int u : ms.sqrt_l) ms.l.push_back(ms.pi[u]);
    ms.r = ms.l;
    ms.r.insert(ms.r.end(), ms.l.begin(), ms.l.end());
    return ms;
}

IMat relabel(const IMat& b, const std::vector<int>& p) {
    int n = int(b.size());
    IMat r = zeros(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) r[p[u]][p[v]] = b[u][v];
    return r;
}

bool same_restricted(const IMat& a, const IMat& b, const std::vector<int>& mut) {
    for (int u : mut)
        if (a[u] != b[u]) return false;
    return true;
}

CyclicReport verify_cyclic(const IceQuiver& full2) {
    CyclicReport rep;
    const auto& cat = *full2.cat;
    auto ms = mu_sequences(full2);
    const IMat& b = full2.bfull;

    IMat bs = mutate_sequence(b, ms.sqrt_l);
    rep.sqrt_l_pi = same_restricted(bs, relabel(b, ms.pi), full2.mut);
    if (!rep.sqrt_l_pi) rep.failures.push_back("mu_sqrt_l(B) differs from pi(B) on mutable rows");

    IMat bl = mutate_sequence(b, ms.l);
    rep.l_pi2 = same_restricted(bl, relabel(b, ms.pi2), full2.mut);
    if (!rep.l_pi2) rep.failures.push_back("mu_l(B) differs from pi^2(B) on mutable rows");

    IMat bl3 = mutate_sequence(mutate_sequence(bl, ms.l), ms.l);
    rep.l_cubed = same_restricted(bl3, b, full2.mut);
    if (!rep.l_cubed) rep.failures.push_back("mu_l^3(B) differs from B on mutable rows");

    rep.g_identity = true;
    for (int i = 0; i < cat.q.n; ++i)
        for (int t = 1; t < cat.tmax[i]; ++t) {
            int u = full2.local[cat.orbits[i][t]];
            int w = full2.local[cat.orbits[i][cat.tmax[i] - t]];
            IVec g = unit(full2.size(), u);
            IMat cur = bs;
            for (auto it = ms.sqrt_l.rbegin(); it != ms.sqrt_l.rend(); ++it) {
                g = mutate_g(g, cur, *it);
                cur = mutate_b(cur, *it);
            }
            bool ok = true;
            for (int v : full2.mut) ok = ok && g[v] == (v == w ? -1 : 0);
            if (!ok) {
                rep.g_identity = false;
                rep.failures.push_back("g-vector identity fails at " + cat.items[cat.orbits[i][t]].label);
            }
        }
    return rep;
}

namespace {

// Exponents of p read on the original quiver: vertex w of the mutated quiver is vertex back[w].
std::set<IVec> supports(const Poly& p, const std::vector<int>& back, const IVec& full, Poly& relabelled) {
    std::set<IVec> out;
    relabelled.clear();
    for (const auto& [e, c] : p) {
        IVec r(e.size(), 0);
        for (size_t w = 0; w < e.size(); ++w) r[back[w]] = e[w];
        relabelled[r] = c;
        if (!is_zero(r) && r != full) out.insert(r);
    }
    require(relabelled.count(full) && relabelled[full] == 1,
            "F-polynomial must contain the full dimension vector with coefficient 1");
    return out;
}

}  // namespace

FPolySubreps tv_subreps_via_fpoly(const IceQuiver& full2, int i) {
    FPolySubreps out;
    const auto& cat = *full2.cat;
    auto ms = mu_sequences(full2);
    const IMat& b = full2.bfull;
    out.precondition = same_restricted(mutate_sequence(b, ms.l), relabel(b, ms.pi2), full2.mut);
    if (!out.precondition) return out;

    int nv = full2.size();
    const auto& chain = cat.orbits[cat.star[i]];
    DualTracked st;
    for (size_t s = 0; s <= chain.size(); ++s) {
        IVec e(nv, 0);
        for (size_t t = s; t < chain.size(); ++t) e[full2.local[chain[t]]] = 1;
        st.fpoly[e] = 1;
    }
    st.gdual = unit(nv, full2.local[cat.neg[i]]);
    for (const auto& a : cat.q.arrows)
        if (a.src == i) st.gdual[full2.local[cat.neg[a.dst]]] -= 1;

    IVec full_neg = tv_dimension(full2, cat.neg[i]);
    Poly relabelled;
    std::vector<int> id(nv);
    for (int v = 0; v < nv; ++v) id[v] = v;
    out.negative = supports(st.fpoly, id, full_neg, out.f_negative);

    IMat cur = b;
    for (int u : ms.l) {
        st = mutate_dual_state(st, cur, u);
        cur = mutate_b(cur, u);
    }
    out.neutral = supports(st.fpoly, ms.pi2_inv, tv_dimension(full2, cat.neu[cat.star[i]]), out.f_neutral);
    for (int u : ms.l) {
        st = mutate_dual_state(st, cur, u);
        cur = mutate_b(cur, u);
    }
    std::vector<int> back4(nv);
    for (int v = 0; v < nv; ++v) back4[v] = ms.pi2_inv[ms.pi2_inv[v]];
    out.positive = supports(st.fpoly, back4, tv_dimension(full2, cat.pos[i]), out.f_positive);
    return out;
}

}  // namespace iart
