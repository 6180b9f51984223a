#include "crossfam/linitial.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossfam {

KSet partner(const KSet& a) {
    if (a.is_empty()) throw std::invalid_argument("partner: empty set");
    int q = a.max();
    std::vector<int> b;
    for (int x = 1; x < q; ++x)
        if (!a.contains(x)) b.push_back(x);
    b.push_back(q);
    return KSet(a.n, std::move(b));
}

FamilyID normalize_id(const KSet& a, int k) {
    if (a.is_empty()) throw std::invalid_argument("normalize_id: empty ID");
    if (k < 1 || k > a.n) throw std::invalid_argument("normalize_id: need 1 <= k <= n");
    const int n = a.n;
    std::vector<int> e = a.elems;
    while (true) {
        if (static_cast<int>(e.size()) > k) {
            // Trim an over-long ID: j = max([a_k] \ A), A' = (A ∩ [j]) ∪ {j}.
            int ak = e[k - 1];
            int j = 0;
            {
                std::size_t idx = 0;
                for (int x = 1; x <= ak; ++x) {
                    if (idx < e.size() && e[idx] == x) {
                        ++idx;
                    } else {
                        j = x;
                    }
                }
            }
            if (j == 0) return FamilyID{KSet::empty(n), k};  // empty family
            std::vector<int> trimmed;
            for (int x : e)
                if (x < j) trimmed.push_back(x);
            trimmed.push_back(j);
            e = std::move(trimmed);
            continue;
        }
        if (!e.empty() && e.back() == n) {
            // Strip the tail run ending at n, keeping everything through the
            // last element not continuing to n.
            std::size_t idx = e.size() - 1;
            while (idx > 0 && e[idx - 1] == e[idx] - 1) --idx;
            if (idx == 0) {
                // The ID is a single run [j, n].
                if (static_cast<int>(e.size()) == k) break;  // last k-set, forced
                // A short run to n denotes the full family.
                e.clear();
                for (int x = n - k + 1; x <= n; ++x) e.push_back(x);
                break;
            }
            e.resize(idx);  // A ∩ [p], p = e[idx-1]
            continue;
        }
        break;
    }
    return FamilyID{KSet(n, std::move(e)), k};
}

Natural linitial_size(const KSet& a, int k) {
    const int n = a.n;
    KSet b = partner(a);
    Natural total = 0;
    for (int j = 1; j <= b.size(); ++j) {
        int bj = b.elems[j - 1];
        total += binomial(n - bj, k - bj + j - 1);
    }
    return total;
}

Natural size_from_id(const FamilyID& fid) {
    if (fid.is_empty_family()) return 0;
    return linitial_size(fid.id, fid.k);
}

Natural size_from_id_direct(const FamilyID& fid) {
    if (fid.is_empty_family()) return 0;
    const int n = fid.n();
    const int k = fid.k;
    const auto& a = fid.id.elems;
    const int sa = static_cast<int>(a.size());
    Natural total = 0;
    int prev = 0;
    for (int d = 1; d <= sa; ++d) {
        for (int x = prev + 1; x < a[d - 1]; ++x)
            total += binomial(n - x, k - d);
        prev = a[d - 1];
    }
    if (k >= sa) total += binomial(n - a.back(), k - sa);
    return total;
}

LInitialFamily max_cross_id(const KSet& p, int a, int b) {
    if (p.is_empty()) throw std::invalid_argument("max_cross_id: empty P");
    if (p.size() > a) throw std::invalid_argument("max_cross_id: |P| > a");
    if (a < 1 || b < 1 || a + b > p.n)
        throw std::invalid_argument("max_cross_id: need a, b >= 1 and a + b <= n");
    FamilyID fid = normalize_id(partner(p), b);
    Natural size = size_from_id(fid);
    return LInitialFamily{std::move(fid), std::move(size)};
}

bool are_cross_intersecting(const LInitialFamily& f, const LInitialFamily& g) {
    if (f.fid.n() != g.fid.n())
        throw std::invalid_argument("are_cross_intersecting: mismatched ground sets");
    if (f.size == 0 || g.size == 0) return true;
    if (f.fid.k + g.fid.k > f.fid.n()) return true;  // sets cannot avoid each other
    LInitialFamily mc = max_cross_id(f.fid.id, f.fid.k, g.fid.k);
    return g.size <= mc.size;
}

std::vector<KSet> enumerate_family(const FamilyID& fid) {
    std::vector<KSet> out;
    if (fid.is_empty_family()) return out;
    Natural size = size_from_id(fid);
    std::vector<KSet> all = enumerate_lex(fid.n(), fid.k);
    if (size > static_cast<long>(all.size()))
        throw std::logic_error("enumerate_family: size exceeds C(n,k)");
    out.assign(all.begin(), all.begin() + size.convert_to<long>());
    return out;
}

std::vector<KSet> complement_family(const std::vector<KSet>& fam) {
    std::vector<KSet> out;
    out.reserve(fam.size());
    for (const KSet& f : fam) {
        std::vector<int> c;
        for (int x = 1; x <= f.n; ++x)
            if (!f.contains(x)) c.push_back(x);
        out.emplace_back(f.n, std::move(c));
    }
    return out;
}

bool cross_intersecting_by_enumeration(const std::vector<KSet>& f,
                                       const std::vector<KSet>& g) {
    std::vector<std::uint64_t> fm, gm;
    fm.reserve(f.size());
    gm.reserve(g.size());
    for (const KSet& s : f) fm.push_back(s.mask());
    for (const KSet& s : g) gm.push_back(s.mask());
    for (std::uint64_t a : fm)
        for (std::uint64_t b : gm)
            if ((a & b) == 0) return false;
    return true;
}

}  // namespace crossfam
