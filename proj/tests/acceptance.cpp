// Acceptance run: one PASS/FAIL line per criterion A-I.  All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "iart/count.hpp"
#include "iart/lieoracle.hpp"
#include "iart/mutation.hpp"

using namespace iart;

namespace {

// Time budgets in seconds per criterion.
constexpr double kBudgetA = 60, kBudgetB = 600, kBudgetC = 60, kBudgetD = 300;
constexpr double kNoBudget = 0;
constexpr unsigned kSeed = 20261015;
constexpr int kRandomZeros = 10;

const char* kD4Fixture = "2>1,3>2,4>2";

std::vector<IVec> box(int n, int m) {
    std::vector<IVec> out{IVec()};
    for (int i = 0; i < n; ++i) {
        std::vector<IVec> next;
        for (const auto& v : out)
            for (int x = 0; x <= m; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

std::map<std::string, std::unique_ptr<ConeInputs>>& input_cache() {
    static std::map<std::string, std::unique_ptr<ConeInputs>> c;
    return c;
}

const ConeInputs& inputs(const ValuedQuiver& q) {
    auto key = q.name() + ":" + q.orientation_string();
    auto& slot = input_cache()[key];
    if (!slot) slot = std::make_unique<ConeInputs>(prepare_cone_inputs(q));
    return *slot;
}

struct Criterion {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& what) {
        if (ok) detail << "first failure: " << what << "; ";
        ok = false;
    }
};

int failures = 0;

void run(char id, const std::string& title, double budget, const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs > budget) c.fail("time budget " + std::to_string(int(budget)) + "s exceeded");
    if (!c.ok) ++failures;
    std::printf("%c %s  %s  (%.1fs)  %s\n", id, c.ok ? "PASS" : "FAIL", title.c_str(), secs, c.detail.str().c_str());
    std::fflush(stdout);
}

std::vector<IVec> strict_counts(const ConeInputs& in) {
    const auto& cat = *in.cat;
    std::vector<IVec> out(3, IVec(cat.q.rank, 0));
    for (const auto& ts : in.tv) {
        const auto& p = cat.items[ts.v];
        int g = p.kind == PKind::Negative ? 0 : p.kind == PKind::Positive ? 1 : 2;
        out[g][p.vertex] = i64(ts.strict().size());
    }
    return out;
}

std::vector<IVec> split3(const IVec& t) {
    size_t n = t.size() / 3;
    return {IVec(t.begin(), t.begin() + n), IVec(t.begin() + n, t.begin() + 2 * n), IVec(t.begin() + 2 * n, t.end())};
}

struct Case {
    ValuedQuiver q;
    int max;
};

std::vector<Case> tensor_cases() {
    return {{build_dynkin('A', 2), 2}, {build_dynkin('A', 3), 1}, {build_dynkin('D', 4), 1}};
}

}  // namespace

int main() {
    run('A', "D4 fixture: strict subreps 3333|7611|1277, 44 irredundant inequalities", kBudgetA, [](Criterion& c) {
        std::string found;
        for (const auto& q : all_orientations('D', 4)) {
            const auto& in = inputs(q);
            auto k = strict_counts(in);
            if (k[0] != IVec{3, 3, 3, 3} || k[1] != IVec{7, 6, 1, 1} || k[2] != IVec{1, 2, 7, 7}) continue;
            auto cone = assemble_cone(in, Variant::Full2);
            auto kept = prune_redundant(cone).columns.size();
            c.detail << "orientation " << q.orientation_string() << ": " << cone.columns.size() << " columns, " << kept
                     << " kept; ";
            if (cone.columns.size() == 44 && kept == 44) found = q.orientation_string();
        }
        if (found.empty()) c.fail("no orientation matches");
    });

    std::vector<std::tuple<std::string, IVec, IVec, IVec>> type_a_triples;

    run('B', "tensor multiplicities: lattice count = Brauer-Klimyk", kBudgetB, [&](Criterion& c) {
        std::mt19937 rng(kSeed);
        for (const auto& [q, m] : tensor_cases()) {
            const auto& in = inputs(q);
            LieOracle lo(in.cat->cd.cartan);
            auto cone = assemble_cone(in, Variant::Full2);
            SliceCounter sc(cone.H(), cone_sigma(in, cone));
            int n = q.rank, cases = 0;
            auto check = [&](const IVec& mu, const IVec& nu, const IVec& lam, i64 want) {
                auto r = sc.count(slice_target(Variant::Full2, {mu, nu, lam}));
                ++cases;
                if (r.status != CountStatus::Ok || r.count != want)
                    c.fail(q.name() + " " + to_string(mu) + " " + to_string(nu) + " " + to_string(lam) + " got " +
                           std::to_string(r.count) + " want " + std::to_string(want));
                if (q.type == 'A') type_a_triples.push_back({q.name(), mu, nu, lam});
            };
            auto grid = box(n, m);
            for (const auto& mu : grid)
                for (const auto& nu : grid)
                    for (const auto& [lam, k] : lo.tensor_decomposition(mu, nu)) check(mu, nu, lam, k);
            auto big = box(n, 2);
            for (int z = 0; z < kRandomZeros;) {
                const auto& mu = grid[rng() % grid.size()];
                const auto& nu = grid[rng() % grid.size()];
                const auto& lam = big[rng() % big.size()];
                if (lo.tensor_multiplicity(mu, nu, lam) != 0) continue;
                check(mu, nu, lam, 0);
                ++z;
            }
            c.detail << q.name() << " " << cases << " cases; ";
        }
    });

    run('C', "u-slices count Kostant partitions", kBudgetC, [](Criterion& c) {
        for (const auto& q : {build_dynkin('A', 2), build_dynkin('A', 3)}) {
            const auto& in = inputs(q);
            IMat cartan = in.cat->cd.cartan;
            auto cone = assemble_cone(in, Variant::U);
            SliceCounter sc(cone.H(), cone_sigma(in, cone));
            auto roots = positive_roots(cartan).weight_coords;
            std::set<IVec> gammas;
            for (const auto& h : box(int(roots.size()), 2)) {
                IVec g(q.rank, 0);
                for (size_t k = 0; k < roots.size(); ++k) g = add(g, scale(roots[k], h[k]));
                gammas.insert(g);
            }
            for (const auto& g : gammas) {
                auto r = sc.count(slice_target(Variant::U, {g}));
                auto want = kostant_partition(cartan, g);
                if (r.status != CountStatus::Ok || r.count != want)
                    c.fail(q.name() + " gamma " + to_string(g) + " got " + std::to_string(r.count) + " want " +
                           std::to_string(want));
            }
            c.detail << q.name() << " " << gammas.size() << " weights; ";
        }
    });

    run('D', "sharp slices count weight multiplicities", kBudgetD, [](Criterion& c) {
        for (const auto& [q, m] : tensor_cases()) {
            const auto& in = inputs(q);
            LieOracle lo(in.cat->cd.cartan);
            auto cone = assemble_cone(in, Variant::Sharp);
            SliceCounter sc(cone.H(), cone_sigma(in, cone));
            int cases = 0;
            for (const auto& mu : box(q.rank, m))
                for (const auto& [lam, k] : lo.freudenthal(mu)) {
                    ++cases;
                    auto r = sc.count(slice_target(Variant::Sharp, {mu, lam}));
                    if (r.status != CountStatus::Ok || r.count != k)
                        c.fail(q.name() + " " + to_string(mu) + " " + to_string(lam) + " got " +
                               std::to_string(r.count) + " want " + std::to_string(k));
                }
            c.detail << q.name() << " " << cases << " cases; ";
        }
    });

    run('E', "mutation identities on A2, A3, D4 (all orientations)", kNoBudget, [](Criterion& c) {
        int quivers = 0;
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}})
            for (const auto& q : all_orientations(t, n)) {
                ++quivers;
                auto r = verify_cyclic(inputs(q).full2);
                if (!r.all())
                    c.fail(q.name() + " " + q.orientation_string() + ": " +
                           (r.failures.empty() ? std::string("?") : r.failures.front()));
            }
        c.detail << quivers << " quivers; ";
    });

    run('F', "F-polynomial route = brute force over F_2 and F_3", kNoBudget, [](Criterion& c) {
        int quivers = 0;
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}})
            for (const auto& q : all_orientations(t, n)) {
                ++quivers;
                const auto& bf = inputs(q);
                auto fp = prepare_cone_inputs(q, SubrepSource::FPoly);
                for (size_t k = 0; k < bf.tv.size(); ++k)
                    if (bf.tv[k].all != fp.tv[k].all)
                        c.fail(q.name() + " " + q.orientation_string() + " " + bf.cat->items[bf.tv[k].v].label);
            }
        c.detail << quivers << " quivers; ";
    });

    run('G', "count 1 at (e(f), f_-, f_+) for every presentation", kNoBudget, [](Criterion& c) {
        int cases = 0;
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}})
            for (const auto& q : all_orientations(t, n)) {
                const auto& in = inputs(q);
                auto cone = assemble_cone(in, Variant::Full2);
                SliceCounter sc(cone.H(), cone_sigma(in, cone));
                for (const auto& p : in.cat->items) {
                    ++cases;
                    auto r = sc.count(slice_target(Variant::Full2, split3(p.triple())));
                    if (r.status != CountStatus::Ok || r.count != 1)
                        c.fail(q.name() + " " + q.orientation_string() + " " + p.label + " got " +
                               std::to_string(r.count));
                }
            }
        c.detail << cases << " presentations; ";
    });

    run('H', "D4 slice (e2, e2, e2): count 1 and contains e_{34,12} - e_{34,1} + e_{2,0}", kNoBudget, [](Criterion& c) {
        auto q = build_dynkin('D', 4, parse_orientation(kD4Fixture));
        const auto& in = inputs(q);
        const auto& cat = *in.cat;
        auto cone = assemble_cone(in, Variant::Full2);
        SlicePolytope s{cone.H(), cone_sigma(in, cone), slice_target(Variant::Full2, {{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}})};
        auto r = count_lattice(s);
        if (r.status != CountStatus::Ok || r.count != 1) c.fail("count " + std::to_string(r.count));
        IVec e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e34{0, 0, 1, 1}, e12{1, 1, 0, 0}, zero(4, 0);
        int a = cat.find_by_weights(e34, e12), b = cat.find_by_weights(e34, e1), d = cat.find_by_weights(e2, zero);
        if (a < 0 || b < 0 || d < 0) {
            c.fail("labelled vertices missing");
            return;
        }
        IVec g(cone.ambient.size(), 0);
        auto at = [&](int v) {
            for (size_t k = 0; k < cone.ambient.size(); ++k)
                if (cone.ambient[k] == v) return int(k);
            return -1;
        };
        g[at(a)] += 1;
        g[at(b)] -= 1;
        g[at(d)] += 1;
        if (!in_slice(s, g)) c.fail("g is not in the slice");
        c.detail << "orientation " << kD4Fixture << "; ";
    });

    run('I', "type A: Littlewood-Richardson = Brauer-Klimyk on the tensor triples", kNoBudget, [&](Criterion& c) {
        std::map<std::string, std::unique_ptr<LieOracle>> oracles;
        for (const auto& [name, mu, nu, lam] : type_a_triples) {
            auto& lo = oracles[name];
            if (!lo) lo = std::make_unique<LieOracle>(lie_cartan('A', int(mu.size())));
            auto lr = lr_tensor_multiplicity(mu, nu, lam);
            auto bk = lo->tensor_multiplicity(mu, nu, lam);
            if (lr != bk) c.fail(name + " " + to_string(mu) + " " + to_string(nu) + " " + to_string(lam));
        }
        if (type_a_triples.empty()) c.fail("no triples");
        c.detail << type_a_triples.size() << " triples; ";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
