#include "crossfam/kset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace crossfam {

KSet::KSet(int ground, std::vector<int> elements)
    : n(ground), elems(std::move(elements)) {
    if (n < 0) throw std::invalid_argument("KSet: negative ground set size");
    for (std::size_t p = 0; p < elems.size(); ++p) {
        if (elems[p] < 1 || elems[p] > n)
            throw std::invalid_argument("KSet: element out of [1, n]");
        if (p > 0 && elems[p - 1] >= elems[p])
            throw std::invalid_argument("KSet: elements not strictly increasing");
    }
}

bool KSet::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

int KSet::min() const {
    if (elems.empty()) throw std::logic_error("KSet::min on empty set");
    return elems.front();
}

int KSet::max() const {
    if (elems.empty()) throw std::logic_error("KSet::max on empty set");
    return elems.back();
}

std::uint64_t KSet::mask() const {
    if (n > 64) throw std::logic_error("KSet::mask requires n <= 64");
    std::uint64_t m = 0;
    for (int x : elems) m |= std::uint64_t{1} << (x - 1);
    return m;
}

std::string KSet::to_string() const {
    std::string s;
    for (std::size_t p = 0; p < elems.size(); ++p) {
        if (p > 0) s += ',';
        s += std::to_string(elems[p]);
    }
    return s;
}

KSet KSet::parse(const std::string& text, int ground) {
    std::vector<int> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        xs.push_back(std::stoi(tok));
    }
    return KSet(ground, std::move(xs));
}

LexOrder lex_compare(const KSet& a, const KSet& b) {
    // min(A\B) and min(B\A); absent differences count as +infinity.
    constexpr int kInf = std::numeric_limits<int>::max();
    int min_a_not_b = kInf;
    int min_b_not_a = kInf;
    std::size_t pa = 0, pb = 0;
    while (pa < a.elems.size() && pb < b.elems.size()) {
        if (a.elems[pa] == b.elems[pb]) {
            ++pa;
            ++pb;
        } else if (a.elems[pa] < b.elems[pb]) {
            min_a_not_b = a.elems[pa];
            break;
        } else {
            min_b_not_a = b.elems[pb];
            break;
        }
    }
    if (min_a_not_b == kInf && min_b_not_a == kInf) {
        if (pa == a.elems.size() && pb < b.elems.size())
            min_b_not_a = b.elems[pb];
        else if (pb == b.elems.size() && pa < a.elems.size())
            min_a_not_b = a.elems[pa];
    }
    // A ⊇ B iff B\A is empty.
    if (min_b_not_a == kInf) return LexOrder::PrecedesOrEqual;
    if (min_a_not_b < min_b_not_a) return LexOrder::PrecedesOrEqual;
    return LexOrder::StrictlyFollows;
}

Natural lex_rank(const KSet& r, int n, int k) {
    if (r.n != n || r.size() != k)
        throw std::invalid_argument("lex_rank: R must be a k-subset of [n]");
    Natural rank = 1;  // counts R itself (A ≺ A)
    int prev = 0;
    for (int d = 1; d <= k; ++d) {
        for (int x = prev + 1; x < r.elems[d - 1]; ++x)
            rank += binomial(n - x, k - d);
        prev = r.elems[d - 1];
    }
    return rank;
}

KSet lex_unrank(const Natural& rank, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("lex_unrank: need 0 <= k <= n");
    if (rank < 1 || rank > binomial(n, k))
        throw std::out_of_range("lex_unrank: rank out of [1, C(n,k)]");
    Natural rem = rank;
    std::vector<int> elems;
    elems.reserve(k);
    int prev = 0;
    for (int d = 1; d <= k; ++d) {
        int x = prev + 1;
        while (true) {
            Natural block = binomial(n - x, k - d);
            if (rem <= block) break;
            rem -= block;
            ++x;
        }
        elems.push_back(x);
        prev = x;
    }
    return KSet(n, std::move(elems));
}

namespace {

void enumerate_rec(int n, int k, int from, std::vector<int>& cur,
                   const std::function<void(const KSet&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(KSet(n, cur));
        return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int x = from; x <= n - need + 1; ++x) {
        cur.push_back(x);
        enumerate_rec(n, k, x + 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_lex(int n, int k, const std::function<void(const KSet&)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("for_each_lex: need 0 <= k <= n");
    std::vector<int> cur;
    cur.reserve(k);
    enumerate_rec(n, k, 1, cur, fn);
}

std::vector<KSet> enumerate_lex(int n, int k) {
    std::vector<KSet> out;
    for_each_lex(n, k, [&](const KSet& s) { out.push_back(s); });
    return out;
}

}  // namespace crossfam
