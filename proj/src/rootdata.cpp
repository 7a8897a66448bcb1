#include "iart/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace iart {

bool ValuedQuiver::simply_laced() const {
    for (const auto& a : arrows)
        if (a.c_sd != 1 || a.c_ds != 1) return false;
    return true;
}

std::string ValuedQuiver::orientation_string() const {
    std::string s;
    for (const auto& a : arrows) {
        if (!s.empty()) s += ',';
        s += std::to_string(a.src + 1) + ">" + std::to_string(a.dst + 1);
    }
    return s;
}

bool valid_dynkin(char type, int rank) {
    switch (type) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

std::vector<std::pair<int, int>> diagram_edges(char type, int n) {
    if (!valid_dynkin(type, n)) throw InvalidInput("invalid Dynkin type " + std::string(1, type) + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    switch (type) {
        case 'A': case 'B': case 'C': case 'F': case 'G':
            for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
            break;
        case 'D':
            for (int i = 0; i + 2 < n - 1; ++i) e.push_back({i, i + 1});
            e.push_back({n - 3, n - 2});
            e.push_back({n - 3, n - 1});
            break;
        case 'E':
            e.push_back({0, 2});
            e.push_back({1, 3});
            for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1});
            break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

IMat lie_cartan(char type, int n) {
    IMat c = identity(n);
    for (auto& row : c)
        for (auto& x : row) x *= 2;
    for (auto [i, j] : diagram_edges(type, n)) c[i][j] = c[j][i] = -1;
    // LiE convention: entry (i,j) = <alpha_i, alpha_j^vee>.
    if (type == 'B') c[n - 2][n - 1] = -2;
    if (type == 'C') c[n - 1][n - 2] = -2;
    if (type == 'F') c[1][2] = -2;
    if (type == 'G') c[1][0] = -3;
    return c;
}

std::vector<std::pair<int, int>> default_orientation(char type, int n) {
    std::vector<std::pair<int, int>> a;
    if (type == 'D') {
        for (int i = 0; i + 3 < n; ++i) a.push_back({i, i + 1});
        a.push_back({n - 2, n - 3});
        a.push_back({n - 1, n - 3});
    } else if (type == 'E') {
        a.push_back({0, 2});
        a.push_back({2, 3});
        a.push_back({1, 3});
        for (int i = n - 1; i > 3; --i) a.push_back({i, i - 1});
    } else {
        for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1});
    }
    return a;
}

std::vector<std::pair<int, int>> parse_orientation(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto p = tok.find('>');
        if (p == std::string::npos) throw InvalidInput("orientation entries look like 1>2, got '" + tok + "'");
        try {
            out.push_back({std::stoi(tok.substr(0, p)) - 1, std::stoi(tok.substr(p + 1)) - 1});
        } catch (const std::exception&) {
            throw InvalidInput("bad orientation entry '" + tok + "'");
        }
    }
    return out;
}

std::pair<char, int> parse_type(const std::string& s) {
    if (s.size() < 2) throw InvalidInput("type must look like A3 or D4, got '" + s + "'");
    char t = char(std::toupper(static_cast<unsigned char>(s[0])));
    int r = 0;
    try {
        size_t pos = 0;
        r = std::stoi(s.substr(1), &pos);
        if (pos != s.size() - 1) throw InvalidInput("");
    } catch (const std::exception&) {
        throw InvalidInput("type must look like A3 or D4, got '" + s + "'");
    }
    if (!valid_dynkin(t, r)) throw InvalidInput("invalid Dynkin type " + s);
    return {t, r};
}

ValuedQuiver build_dynkin(char type, int n, const std::vector<std::pair<int, int>>& arrows) {
    auto edges = diagram_edges(type, n);
    IMat c = lie_cartan(type, n);
    ValuedQuiver q;
    q.type = type;
    q.rank = n;
    q.n = n;
    std::set<std::pair<int, int>> seen;
    for (auto [s, t] : arrows) {
        if (s < 0 || t < 0 || s >= n || t >= n) throw InvalidInput("orientation vertex out of range");
        auto key = std::minmax(s, t);
        if (!std::binary_search(edges.begin(), edges.end(), std::pair<int, int>(key.first, key.second)))
            throw InvalidInput("orientation lists an edge " + std::to_string(s + 1) + "-" + std::to_string(t + 1) +
                               " that is not in the diagram");
        if (!seen.insert({key.first, key.second}).second) throw InvalidInput("edge oriented twice");
        q.arrows.push_back({s, t, -c[t][s], -c[s][t]});
    }
    if (seen.size() != edges.size()) throw InvalidInput("orientation must direct every diagram edge exactly once");
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const QArrow& a, const QArrow& b) { return std::minmax(a.src, a.dst) < std::minmax(b.src, b.dst); });

    // Minimal symmetrizer: propagate ratios along the tree, then clear denominators.
    std::vector<std::pair<i64, i64>> ratio(n, {0, 1});
    ratio[0] = {1, 1};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : q.arrows) {
            // d_src c_sd = c_ds d_dst
            auto& rs = ratio[a.src];
            auto& rt = ratio[a.dst];
            if (rs.first && !rt.first) {
                rt = {rs.first * a.c_sd, rs.second * a.c_ds};
                changed = true;
            } else if (rt.first && !rs.first) {
                rs = {rt.first * a.c_ds, rt.second * a.c_sd};
                changed = true;
            }
        }
    }
    i64 l = 1;
    for (auto& r : ratio) {
        i64 g = std::gcd(r.first, r.second);
        r.first /= g;
        r.second /= g;
        l = std::lcm(l, r.second);
    }
    q.d.resize(n);
    i64 g = 0;
    for (int i = 0; i < n; ++i) {
        q.d[i] = ratio[i].first * (l / ratio[i].second);
        g = std::gcd(g, q.d[i]);
    }
    for (auto& x : q.d) x /= g;
    for (const auto& a : q.arrows) require(q.d[a.src] * a.c_sd == a.c_ds * q.d[a.dst], "symmetrizer");
    return q;
}

ValuedQuiver build_dynkin(char type, int n) { return build_dynkin(type, n, default_orientation(type, n)); }

std::vector<ValuedQuiver> all_orientations(char type, int n) {
    auto edges = diagram_edges(type, n);
    std::vector<ValuedQuiver> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<std::pair<int, int>> arrows;
        for (size_t k = 0; k < edges.size(); ++k) {
            auto [i, j] = edges[k];
            if (mask >> k & 1u)
                arrows.push_back({j, i});
            else
                arrows.push_back({i, j});
        }
        out.push_back(build_dynkin(type, n, arrows));
    }
    return out;
}

CartanData cartan_data(const ValuedQuiver& q) {
    int n = q.n;
    CartanData cd;
    cd.El = identity(n);
    cd.Er = identity(n);
    cd.D = zeros(n, n);
    for (int i = 0; i < n; ++i) cd.D[i][i] = q.d[i];
    for (const auto& a : q.arrows) {
        cd.El[a.src][a.dst] = -a.c_ds;
        cd.Er[a.src][a.dst] = -a.c_sd;
    }
    cd.euler = matmul(cd.El, cd.D);
    require(cd.euler == matmul(cd.D, cd.Er), "E_l D = D E_r");
    cd.cartan = cd.El;
    auto ert = transpose(cd.Er);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cd.cartan[i][j] += ert[i][j];
    return cd;
}

IVec reflect_weight(const IMat& c, const IVec& w, int i) {
    IVec r(w);
    i64 k = w[i];
    for (size_t j = 0; j < r.size(); ++j) r[j] -= k * c[i][j];
    return r;
}

namespace {

struct VecHash {
    size_t operator()(const IVec& v) const {
        size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ size_t(x + 0x9e3779b9)) * 1099511628211ull;
        return h;
    }
};

IVec flatten(const IMat& m) {
    IVec f;
    for (const auto& r : m) f.insert(f.end(), r.begin(), r.end());
    return f;
}

}  // namespace

WeylGroup weyl_group(const IMat& c, size_t cap) {
    int n = int(c.size());
    std::vector<IMat> gens;
    for (int i = 0; i < n; ++i) {
        IMat s = identity(n);
        for (int k = 0; k < n; ++k) s[i][k] -= c[i][k];
        gens.push_back(s);
    }
    WeylGroup w;
    std::unordered_map<IVec, int, VecHash> index;
    w.elements.push_back(identity(n));
    w.lengths.push_back(0);
    index[flatten(w.elements[0])] = 0;
    for (size_t head = 0; head < w.elements.size(); ++head) {
        for (const auto& s : gens) {
            IMat m = matmul(w.elements[head], s);
            auto key = flatten(m);
            if (index.count(key)) continue;
            if (w.elements.size() >= cap) throw Unsupported("Weyl group exceeds cap of " + std::to_string(cap));
            index[key] = int(w.elements.size());
            w.elements.push_back(std::move(m));
            w.lengths.push_back(w.lengths[head] + 1);
        }
    }
    w.w0 = int(std::max_element(w.lengths.begin(), w.lengths.end()) - w.lengths.begin());
    const IMat& m0 = w.elements[w.w0];
    w.star.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        IVec img = vecmat(c[i], m0);
        for (int j = 0; j < n; ++j)
            if (scale(c[j], -1) == img) w.star[i] = j;
        require(w.star[i] >= 0, "w0 does not map a simple root to a negative simple root");
    }
    return w;
}

std::vector<int> star_permutation(const IMat& c) {
    int n = int(c.size());
    // Reduced word of w0: reflect rho toward the antidominant chamber.
    IVec y(n, 1);
    std::vector<int> word;
    while (true) {
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (y[i] > 0) {
                k = i;
                break;
            }
        if (k < 0) break;
        y = reflect_weight(c, y, k);
        word.push_back(k);
    }
    std::vector<int> star(n, -1);
    for (int i = 0; i < n; ++i) {
        IVec a = c[i];
        for (int k : word) a = reflect_weight(c, a, k);
        for (int j = 0; j < n; ++j)
            if (scale(c[j], -1) == a) star[i] = j;
        require(star[i] >= 0, "w0 does not map a simple root to a negative simple root");
    }
    return star;
}

RootSystem positive_roots(const IMat& c) {
    int n = int(c.size());
    std::set<IVec> found;
    std::vector<IVec> queue;
    for (int i = 0; i < n; ++i) {
        queue.push_back(unit(n, i));
        found.insert(queue.back());
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        IVec r = queue[h];
        for (int j = 0; j < n; ++j) {
            i64 pairing = 0;
            for (int i = 0; i < n; ++i) pairing += r[i] * c[i][j];
            IVec s(r);
            s[j] -= pairing;
            if (!is_nonneg(s) || is_zero(s)) continue;
            if (found.insert(s).second) queue.push_back(s);
        }
    }
    RootSystem rs;
    rs.simple_coords.assign(found.begin(), found.end());
    std::stable_sort(rs.simple_coords.begin(), rs.simple_coords.end(), [](const IVec& a, const IVec& b) {
        i64 ha = 0, hb = 0;
        for (auto x : a) ha += x;
        for (auto x : b) hb += x;
        return ha < hb;
    });
    for (const auto& r : rs.simple_coords) rs.weight_coords.push_back(vecmat(r, c));
    return rs;
}

}  // namespace iart
