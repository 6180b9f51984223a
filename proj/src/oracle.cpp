#include "crossfam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace crossfam {

namespace {

constexpr long long kWitnessCap = 10'000;

/// Per-instance search tables: for each family j (0-based), the L-initial
/// IDs by size, and for each other family q the threshold
/// cross[j][q][s] = |max q-uniform family cross-intersecting the size-s
/// L-initial j-family|.
struct Tables {
    std::vector<long long> cap;                       // C(n, k_j)
    std::vector<std::vector<FamilyID>> ids;           // ids[j][s], s >= 1
    std::vector<std::vector<std::vector<long long>>> cross;
};

Tables build_tables(const ProblemInstance& inst) {
    const int n = inst.n;
    const int t = inst.t();
    Tables tab;
    tab.cap.resize(t);
    tab.ids.resize(t);
    tab.cross.assign(t, std::vector<std::vector<long long>>(t));
    for (int j = 0; j < t; ++j) {
        const int kj = inst.k(j + 1);
        tab.cap[j] = binomial(n, kj).convert_to<long long>();
        tab.ids[j].resize(tab.cap[j] + 1);
        for (long long s = 1; s <= tab.cap[j]; ++s)
            tab.ids[j][s] = normalize_id(lex_unrank(s, n, kj), kj);
    }
    for (int j = 0; j < t; ++j) {
        const int kj = inst.k(j + 1);
        for (int q = 0; q < t; ++q) {
            if (q == j) continue;
            const int kq = inst.k(q + 1);
            auto& row = tab.cross[j][q];
            row.resize(tab.cap[j] + 1);
            for (long long s = 1; s <= tab.cap[j]; ++s) {
                if (kj + kq > n) {
                    row[s] = tab.cap[q];
                } else {
                    row[s] = max_cross_id(tab.ids[j][s].id, kj, kq)
                                 .size.convert_to<long long>();
                }
            }
        }
    }
    return tab;
}

}  // namespace

OracleResult linitial_search(const ProblemInstance& inst, long long budget) {
    const int t = inst.t();
    Natural space = 1;
    for (int j = 1; j <= t; ++j) space *= binomial(inst.n, inst.k(j));
    if (space > budget) throw BudgetExceeded(space);

    Tables tab = build_tables(inst);
    OracleResult res;
    res.method = "linitial-grid";
    res.optimum = 0;
    long long best = 0;
    std::vector<long long> cur(t, 0);

    auto record = [&](long long total) {
        if (total > best) {
            best = total;
            res.witnesses.clear();
            res.ids.clear();
            res.maximizer_count = 0;
            res.witnesses_complete = true;
        }
        ++res.maximizer_count;
        if (static_cast<long long>(res.witnesses.size()) < kWitnessCap) {
            std::vector<Natural> sizes;
            std::vector<FamilyID> wids;
            for (int j = 0; j < t; ++j) {
                sizes.emplace_back(cur[j]);
                wids.push_back(tab.ids[j][cur[j]]);
            }
            res.witnesses.push_back(std::move(sizes));
            res.ids.push_back(std::move(wids));
        } else {
            res.witnesses_complete = false;
        }
    };

    // Exhaustive over the first t-1 sizes, descending with optimistic
    // pruning; the last size is the largest value all thresholds allow.
    std::function<void(int, long long)> dfs = [&](int j, long long partial) {
        long long rest = 0;
        for (int p = j + 1; p < t; ++p) rest += tab.cap[p];
        long long ub = tab.cap[j];
        for (int p = 0; p < j; ++p)
            ub = std::min(ub, tab.cross[p][j][cur[p]]);
        if (j == t - 1) {
            for (long long s = ub; s >= 1; --s) {
                bool ok = true;
                for (int p = 0; p < j; ++p)
                    if (cur[p] > tab.cross[j][p][s]) {
                        ok = false;
                        break;
                    }
                ++res.states_searched;
                if (!ok) continue;
                if (partial + s >= best) {
                    cur[j] = s;
                    record(partial + s);
                }
                break;  // smaller s only lowers the total
            }
            return;
        }
        for (long long s = ub; s >= 1; --s) {
            if (partial + s + rest < best) break;
            bool ok = true;
            for (int p = 0; p < j; ++p)
                if (cur[p] > tab.cross[j][p][s]) {
                    ok = false;
                    break;
                }
            ++res.states_searched;
            if (!ok) continue;
            cur[j] = s;
            dfs(j + 1, partial + s);
        }
    };
    dfs(0, 0);
    res.optimum = best;

    for (const ExtremalConfig& cfg : extremal_configs(inst)) {
        if (!cfg.verified || res.matched_case) continue;
        for (const auto& w : res.witnesses)
            if (w == cfg.sizes) {
                res.matched_case = cfg.case_label;
                break;
            }
    }
    return res;
}

namespace {

/// Maximum matching (Kuhn augmenting paths) in a bipartite graph given as
/// left-vertex adjacency lists over right ids [0, n_right).
int max_matching(const std::vector<std::vector<int>>& adj, int n_right) {
    std::vector<int> match_r(n_right, -1);
    std::vector<char> used;
    std::function<bool(int)> try_left = [&](int a) -> bool {
        for (int b : adj[a]) {
            if (used[b]) continue;
            used[b] = 1;
            if (match_r[b] < 0 || try_left(match_r[b])) {
                match_r[b] = a;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (std::size_t a = 0; a < adj.size(); ++a) {
        used.assign(n_right, 0);
        if (try_left(static_cast<int>(a))) ++matched;
    }
    return matched;
}

}  // namespace

OracleResult micro_search_t2(int n, int k1, int k2) {
    ProblemInstance inst(n, {k1, k2});  // validates the shape
    std::vector<KSet> left = enumerate_lex(n, k1);
    std::vector<KSet> right = enumerate_lex(n, k2);
    const int cl = static_cast<int>(left.size());
    const int cr = static_cast<int>(right.size());
    OracleResult res;

    if (cl <= 20 && cr <= 64) {
        // Full enumeration of every non-empty A_1; A_2 is always the closure
        // (all k_2-sets meeting every member of A_1), which can only enlarge
        // an optimal A_2 and keeps the pair cross-intersecting.
        res.method = "subset-enumeration";
        std::vector<std::uint64_t> meets(cl);
        const std::uint64_t full =
            cr == 64 ? ~0ULL : (1ULL << cr) - 1;
        for (int a = 0; a < cl; ++a) {
            std::uint64_t m = 0;
            for (int b = 0; b < cr; ++b)
                if ((left[a].mask() & right[b].mask()) != 0) m |= 1ULL << b;
            meets[a] = m;
        }
        std::vector<std::uint64_t> closure(std::size_t(1) << cl);
        closure[0] = full;
        long long best = 0;
        std::vector<std::pair<long long, long long>> best_sizes;
        for (std::uint64_t mask = 1; mask < closure.size(); ++mask) {
            const int low = std::countr_zero(mask);
            const std::uint64_t a2 = closure[mask & (mask - 1)] & meets[low];
            closure[mask] = a2;
            if (a2 == 0) continue;
            ++res.states_searched;
            const long long total = std::popcount(mask) + std::popcount(a2);
            if (total > best) {
                best = total;
                best_sizes.clear();
                res.maximizer_count = 0;
            }
            if (total == best) {
                ++res.maximizer_count;
                std::pair<long long, long long> sv{std::popcount(mask),
                                                   std::popcount(a2)};
                if (std::find(best_sizes.begin(), best_sizes.end(), sv) ==
                    best_sizes.end())
                    best_sizes.push_back(sv);
            }
        }
        res.optimum = best;
        std::sort(best_sizes.begin(), best_sizes.end(),
                  std::greater<std::pair<long long, long long>>());
        for (const auto& [s1, s2] : best_sizes)
            res.witnesses.push_back({Natural(s1), Natural(s2)});
        return res;
    }

    if (static_cast<long long>(cl) * cr > 1'000'000)
        throw BudgetExceeded(Natural(cl) * cr);

    // Matching path: with A_2 the closure, |A_1| + |A_2| = C(n,k_2) +
    // (|A_1| - |N(A_1)|) in the disjointness graph (N = disjoint k_2-sets),
    // subject to A_1 non-empty and N(A_1) missing at least one k_2-set.
    // Forcing a member a of A_1 and an uncovered b reduces the constrained
    // maximum deficiency to the Koenig-Ore formula on an induced subgraph.
    res.method = "matching-deficiency";
    std::vector<std::vector<int>> adj(cl);
    for (int a = 0; a < cl; ++a)
        for (int b = 0; b < cr; ++b)
            if ((left[a].mask() & right[b].mask()) == 0) adj[a].push_back(b);
    long long best_def = 0;
    bool have = false;
    for (int a = 0; a < cl; ++a) {
        std::vector<char> a_disjoint(cr, 0);
        for (int b : adj[a]) a_disjoint[b] = 1;
        for (int b = 0; b < cr; ++b) {
            if (a_disjoint[b]) continue;  // b must stay intersecting-able
            ++res.states_searched;
            // Left side: all k_1-sets meeting b, minus a; right side: the
            // k_2-sets already hit by a are excluded (counted via deg(a)).
            std::vector<int> rmap(cr, -1);
            int rn = 0;
            for (int x = 0; x < cr; ++x)
                if (!a_disjoint[x]) rmap[x] = rn++;
            std::vector<std::vector<int>> h;
            int ln = 0;
            for (int x = 0; x < cl; ++x) {
                if (x == a) continue;
                bool meets_b = true;
                for (int y : adj[x])
                    if (y == b) {
                        meets_b = false;
                        break;
                    }
                if (!meets_b) continue;
                h.emplace_back();
                for (int y : adj[x])
                    if (rmap[y] >= 0) h[ln].push_back(rmap[y]);
                ++ln;
            }
            const long long nu = max_matching(h, rn);
            const long long value =
                1 - static_cast<long long>(adj[a].size()) + (ln - nu);
            if (!have || value > best_def) {
                best_def = value;
                have = true;
            }
        }
    }
    res.optimum = Natural(cr) + best_def;

    // Cross-validate against the restricted search and reuse its witness.
    OracleResult lin = linitial_search(inst);
    if (lin.optimum == res.optimum && !lin.witnesses.empty()) {
        res.witnesses.push_back(lin.witnesses.front());
        res.ids.push_back(lin.ids.front());
    }
    return res;
}

bool pairwise_threshold_feasible(const std::vector<Natural>& sizes,
                                 const ProblemInstance& inst) {
    const int t = inst.t();
    if (static_cast<int>(sizes.size()) != t)
        throw std::invalid_argument("pairwise_threshold_feasible: need t sizes");
    std::vector<FamilyID> ids(t);
    for (int j = 0; j < t; ++j) {
        const int kj = inst.k(j + 1);
        if (sizes[j] < 1 || sizes[j] > binomial(inst.n, kj))
            throw std::invalid_argument(
                "pairwise_threshold_feasible: size out of [1, C(n,k_j)]");
        ids[j] = normalize_id(lex_unrank(sizes[j], inst.n, kj), kj);
    }
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            if (a == b) continue;
            const int ka = inst.k(a + 1), kb = inst.k(b + 1);
            if (ka + kb > inst.n) continue;
            if (sizes[b] > max_cross_id(ids[a].id, ka, kb).size) return false;
        }
    return true;
}

}  // namespace crossfam
