#include "iart/lieoracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <set>

#include <json.hpp>

#include "iart/rootdata.hpp"

namespace iart {

namespace {

constexpr int kCacheVersion = 1;

}  // namespace

LieOracle::LieOracle(const IMat& cartan) : cartan_(cartan) {
    int n = rank();
    // (alpha_i, alpha_j) = C[i][j] d_j must be symmetric.
    QVec d(n, Q(0));
    for (int s = 0; s < n; ++s) {
        if (sgn(d[s])) continue;
        d[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (j != i && cartan[i][j] != 0 && sgn(d[j]) == 0) {
                    d[j] = Q(cartan[j][i]) * d[i] / Q(cartan[i][j]);
                    stack.push_back(j);
                }
        }
    }
    QMat inv = inverse_q(cartan);
    wform_.assign(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) wform_[i][j] = inv[i][j] * d[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) require(wform_[i][j] == wform_[j][i], "weight form is not symmetric");
    auto rs = positive_roots(cartan);
    pos_roots_ = rs.weight_coords;
    pos_simple_ = rs.simple_coords;
}

bool LieOracle::dominant(const IVec& w) const { return is_nonneg(w); }

IVec LieOracle::dominant_conjugate(IVec w, int* parity) const {
    int p = 0;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rank(); ++i)
            if (w[i] < 0) {
                w = reflect_weight(cartan_, w, i);
                p ^= 1;
                moved = true;
            }
    }
    if (parity) *parity = p;
    return w;
}

Q LieOracle::form(const IVec& a, const IVec& b) const {
    Q s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank(); ++j)
            if (b[j]) s += Q(a[i] * b[j]) * wform_[i][j];
    }
    return s;
}

std::map<IVec, i64> LieOracle::dominant_mults(const IVec& mu) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dominant_memo_.find(mu);
        if (it != dominant_memo_.end()) return it->second;
    }
    if (!dominant(mu)) throw InvalidInput("highest weight " + to_string(mu) + " is not dominant");
    int n = rank();
    QMat inv = inverse_q(cartan_);
    auto height = [&](const IVec& lam) {
        Q h = 0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) h += Q(mu[i] - lam[i]) * inv[i][j];
        require(h.get_den() == 1, "weight outside the root coset of mu");
        return h.get_num().get_si();
    };
    std::set<IVec> seen{mu};
    std::queue<IVec> todo;
    todo.push(mu);
    std::vector<std::pair<i64, IVec>> doms;
    while (!todo.empty()) {
        IVec lam = todo.front();
        todo.pop();
        doms.push_back({height(lam), lam});
        for (const auto& a : pos_roots_) {
            IVec nxt = sub(lam, a);
            if (dominant(nxt) && seen.insert(nxt).second) todo.push(nxt);
        }
    }
    std::sort(doms.begin(), doms.end());
    IVec rho(n, 1);
    std::map<IVec, i64> m;
    auto mult = [&](const IVec& w) -> i64 {
        auto it = m.find(dominant_conjugate(w));
        return it == m.end() ? 0 : it->second;
    };
    Q top = form(add(mu, rho), add(mu, rho));
    for (const auto& [h, lam] : doms) {
        if (h == 0) {
            m[lam] = 1;
            continue;
        }
        Q num = 0;
        for (size_t r = 0; r < pos_roots_.size(); ++r) {
            i64 ht = 0;
            for (auto x : pos_simple_[r]) ht += x;
            IVec w = lam;
            for (i64 k = 1; h - k * ht >= 0; ++k) {
                w = add(w, pos_roots_[r]);
                i64 c = mult(w);
                if (c) num += Q(c) * form(w, pos_roots_[r]);
            }
        }
        Q den = top - form(add(lam, rho), add(lam, rho));
        Q val = 2 * num / den;
        require(val.get_den() == 1 && sgn(val) >= 0, "Freudenthal recursion produced a non-integer multiplicity");
        if (sgn(val) > 0) m[lam] = val.get_num().get_si();
    }
    std::lock_guard<std::mutex> lock(mu_);
    dominant_memo_[mu] = m;
    return m;
}

const WeightMults& LieOracle::freudenthal(const IVec& mu) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(mu);
        if (it != memo_.end()) return *it->second;
    }
    auto dm = dominant_mults(mu);
    auto out = std::make_unique<WeightMults>();
    for (const auto& [lam, c] : dm) {
        std::set<IVec> orbit{lam};
        std::vector<IVec> stack{lam};
        while (!stack.empty()) {
            IVec w = stack.back();
            stack.pop_back();
            for (int i = 0; i < rank(); ++i) {
                IVec r = reflect_weight(cartan_, w, i);
                if (orbit.insert(r).second) stack.push_back(r);
            }
        }
        for (const auto& w : orbit) (*out)[w] = c;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = memo_[mu];
    if (!slot) slot = std::move(out);
    return *slot;
}

Z LieOracle::weyl_dimension(const IVec& mu) const {
    IVec rho(rank(), 1);
    Q prod = 1;
    for (const auto& a : pos_roots_) prod *= form(add(mu, rho), a) / form(rho, a);
    require(prod.get_den() == 1, "Weyl dimension is not an integer");
    return prod.get_num();
}

std::map<IVec, i64> LieOracle::tensor_decomposition(const IVec& mu, const IVec& nu) const {
    if (!dominant(mu) || !dominant(nu)) throw InvalidInput("tensor factors must be dominant");
    IVec rho(rank(), 1);
    std::map<IVec, i64> out;
    for (const auto& [beta, c] : freudenthal(nu)) {
        int parity = 0;
        IVec x = dominant_conjugate(add(add(mu, beta), rho), &parity);
        if (std::find(x.begin(), x.end(), 0) != x.end()) continue;
        out[sub(x, rho)] += parity ? -c : c;
    }
    for (auto it = out.begin(); it != out.end();) {
        require(it->second >= 0, "Brauer-Klimyk produced a negative multiplicity");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

i64 LieOracle::tensor_multiplicity(const IVec& mu, const IVec& nu, const IVec& lambda) const {
    if (!dominant(lambda)) throw InvalidInput("lambda must be dominant");
    auto d = tensor_decomposition(mu, nu);
    auto it = d.find(lambda);
    return it == d.end() ? 0 : it->second;
}

void LieOracle::save_cache(const std::string& path) const {
    nlohmann::json j;
    j["format_version"] = kCacheVersion;
    j["cartan"] = cartan_;
    nlohmann::json entries = nlohmann::json::array();
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [mu, mults] : dominant_memo_) {
        nlohmann::json e;
        e["mu"] = mu;
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& [w, c] : mults) ms.push_back({{"weight", w}, {"mult", c}});
        e["dominant"] = ms;
        entries.push_back(e);
    }
    j["entries"] = entries;
    std::ofstream(path) << j.dump(1) << "\n";
}

void LieOracle::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return;
    }
    if (j.value("format_version", 0) != kCacheVersion) return;
    if (j["cartan"].get<IMat>() != cartan_) return;
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& e : j["entries"]) {
        std::map<IVec, i64> mults;
        for (const auto& m : e["dominant"]) mults[m["weight"].get<IVec>()] = m["mult"].get<i64>();
        dominant_memo_[e["mu"].get<IVec>()] = mults;
    }
}

std::vector<i64> weight_to_partition(const IVec& w) {
    std::vector<i64> p(w.size() + 1, 0);
    for (int k = int(w.size()) - 1; k >= 0; --k) p[k] = p[k + 1] + w[k];
    return p;
}

i64 lr_coefficient(const std::vector<i64>& a, const std::vector<i64>& b, const std::vector<i64>& c) {
    size_t rows = std::max({a.size(), c.size()});
    auto at = [](const std::vector<i64>& p, size_t i) { return i < p.size() ? p[i] : 0; };
    i64 sa = 0, sb = 0, sc = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    for (auto x : c) sc += x;
    if (sa + sb != sc) return 0;
    for (size_t r = 0; r < rows; ++r)
        if (at(a, r) > at(c, r)) return 0;

    std::vector<std::pair<size_t, i64>> cells;  // reading order: top to bottom, right to left
    for (size_t r = 0; r < rows; ++r)
        for (i64 col = at(c, r) - 1; col >= at(a, r); --col) cells.push_back({r, col});
    std::map<std::pair<size_t, i64>, int> T;
    std::vector<i64> cnt(b.size() + 1, 0);
    std::function<i64(size_t)> go = [&](size_t k) -> i64 {
        if (k == cells.size()) return 1;
        auto [r, col] = cells[k];
        int hi = int(b.size());
        if (auto it = T.find({r, col + 1}); it != T.end()) hi = std::min(hi, it->second);
        int lo = 1;
        if (r > 0 && col >= at(a, r - 1) && col < at(c, r - 1)) lo = T.at({r - 1, col}) + 1;
        i64 total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v] + 1 > b[v - 1]) continue;
            if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
            ++cnt[v];
            T[{r, col}] = v;
            total += go(k + 1);
            T.erase({r, col});
            --cnt[v];
        }
        return total;
    };
    return go(0);
}

i64 lr_tensor_multiplicity(const IVec& mu, const IVec& nu, const IVec& lambda) {
    auto a = weight_to_partition(mu), b = weight_to_partition(nu), c = weight_to_partition(lambda);
    i64 sa = 0, sb = 0, sc = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    for (auto x : c) sc += x;
    i64 parts = i64(c.size());
    i64 diff = sa + sb - sc;
    if (diff < 0 || diff % parts) return 0;
    for (auto& x : c) x += diff / parts;
    return lr_coefficient(a, b, c);
}

}  // namespace iart
