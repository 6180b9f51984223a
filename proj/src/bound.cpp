#include "crossfam/bound.hpp"

#include <stdexcept>

namespace crossfam {

BoundResult theorem_bound(const ProblemInstance& inst) {
    const int n = inst.n;
    const int t = inst.t();
    const int kt = inst.k(t);
    BoundResult r;
    r.cover_branch = binomial(n, inst.k(1)) - binomial(n - kt, inst.k(1));
    for (int i = 2; i <= t; ++i)
        r.cover_branch += binomial(n - kt, inst.k(i) - kt);
    r.star_branch = 0;
    for (int i = 1; i <= t; ++i)
        r.star_branch += binomial(n - 1, inst.k(i) - 1);
    r.bound = r.cover_branch >= r.star_branch ? r.cover_branch : r.star_branch;
    r.cover_attains = r.cover_branch == r.bound;
    r.star_attains = r.star_branch == r.bound;
    return r;
}

static void check_index(const ProblemInstance& inst, int i) {
    if (i < 1 || i > inst.t())
        throw std::invalid_argument("family index i out of [1, t]");
}

std::vector<KSet> id_space_padded(const ProblemInstance& inst, int i) {
    check_index(inst, i);
    const int n = inst.n;
    const int ki = inst.k(i);
    const int m = inst.m(i);
    Natural z = 0;
    for (int s = 2; s <= m; ++s) z += binomial(n - s, ki - 1);
    Natural base = binomial(n - 1, ki - 1);
    long long count = z.convert_to<long long>() + 1;
    std::vector<KSet> out;
    out.reserve(count);
    for (long long r = 0; r < count; ++r)
        out.push_back(lex_unrank(base + r, n, ki));
    return out;
}

std::vector<FamilyID> id_space(const ProblemInstance& inst, int i) {
    std::vector<FamilyID> out;
    for (const KSet& padded : id_space_padded(inst, i))
        out.push_back(normalize_id(padded, inst.k(i)));
    return out;
}

FEvaluation f_eval(const ProblemInstance& inst, int i, const FamilyID& r) {
    check_index(inst, i);
    if (r.is_empty_family())
        throw std::invalid_argument("f_eval: empty-family ID");
    FEvaluation ev;
    ev.i = i;
    ev.id = r;
    ev.per_family_sizes.resize(inst.t());
    KSet t = partner(r.id);
    ev.f_value = 0;
    for (int j = 1; j <= inst.t(); ++j) {
        Natural s = j == i ? linitial_size(r.id, inst.k(i))
                           : linitial_size(t, inst.k(j));
        ev.f_value += s;
        ev.per_family_sizes[j - 1] = std::move(s);
    }
    ev.rank_offset =
        ev.per_family_sizes[i - 1] - binomial(inst.n - 1, inst.k(i) - 1);
    return ev;
}

static void check_ordered(const FamilyID& r, const FamilyID& r2) {
    if (lex_compare(r.id, r2.id) == LexOrder::StrictlyFollows)
        throw std::invalid_argument("alpha/beta: R2 strictly precedes R");
}

Natural alpha(const ProblemInstance& inst, int i, const FamilyID& r,
              const FamilyID& r2) {
    check_index(inst, i);
    check_ordered(r, r2);
    return linitial_size(r2.id, inst.k(i)) - linitial_size(r.id, inst.k(i));
}

Natural beta(const ProblemInstance& inst, int i, const FamilyID& r,
             const FamilyID& r2) {
    check_index(inst, i);
    check_ordered(r, r2);
    KSet t = partner(r.id);
    KSet t2 = partner(r2.id);
    Natural total = 0;
    for (int j = 1; j <= inst.t(); ++j) {
        if (j == i) continue;
        total += linitial_size(t, inst.k(j)) - linitial_size(t2, inst.k(j));
    }
    return total;
}

ScanReport f_scan(const ProblemInstance& inst, int i, bool keep_curve) {
    check_index(inst, i);
    ScanReport rep;
    rep.max_value = 0;
    for (const KSet& padded : id_space_padded(inst, i)) {
        FamilyID id = normalize_id(padded, inst.k(i));
        FEvaluation ev = f_eval(inst, i, id);
        if (ev.f_value > rep.max_value) {
            rep.max_value = ev.f_value;
            rep.argmax.clear();
            rep.argmax.push_back(id);
        } else if (ev.f_value == rep.max_value) {
            rep.argmax.push_back(id);
        }
        if (keep_curve) rep.curve.push_back(std::move(ev));
    }
    const KSet one(inst.n, {1});
    const KSet mm(inst.n, {inst.m(i)});
    for (const FamilyID& id : rep.argmax) {
        if (id.id == one) rep.attained_at_one = true;
        if (id.id == mm) rep.attained_at_m = true;
    }
    return rep;
}

std::vector<NamedBound> reference_bounds(const ProblemInstance& inst) {
    const int n = inst.n;
    const int t = inst.t();
    const int k1 = inst.k(1);
    const bool equal_k = inst.k(1) == inst.k(t);
    std::vector<NamedBound> out;

    {
        NamedBound b{"hilton", equal_k, 0,
                     equal_k ? "" : "requires k_1 = ... = k_t"};
        if (equal_k) {
            Natural whole = binomial(n, k1);
            Natural stars = Natural(t) * binomial(n - 1, k1 - 1);
            b.value = whole >= stars ? whole : stars;
        }
        out.push_back(std::move(b));
    }
    {
        bool ok = t == 2 && equal_k;
        NamedBound b{"hilton-milner", ok, 0, ok ? "" : "requires t = 2, equal k"};
        if (ok) b.value = binomial(n, k1) - binomial(n - k1, k1) + 1;
        out.push_back(std::move(b));
    }
    {
        bool ok = t == 2;
        NamedBound b{"frankl-tokushige", ok, 0, ok ? "" : "requires t = 2"};
        if (ok) b.value = binomial(n, k1) - binomial(n - inst.k(2), k1) + 1;
        out.push_back(std::move(b));
    }
    {
        // Non-uniform two-family bound with r = k_2, s = k_1; dominates the
        // uniform t = 2 optimum.
        bool ok = t == 2;
        NamedBound b{"borg-feghali", ok, 0, ok ? "" : "requires t = 2"};
        if (ok) {
            Natural v = 1;
            for (int d = 1; d <= k1; ++d)
                v += binomial(n, d) - binomial(n - inst.k(2), d);
            b.value = std::move(v);
        }
        out.push_back(std::move(b));
    }
    {
        NamedBound b{"sfq-corollary", equal_k, 0,
                     equal_k ? "" : "requires k_1 = ... = k_t"};
        if (equal_k) {
            Natural hm = binomial(n, k1) - binomial(n - k1, k1) + (t - 1);
            Natural stars = Natural(t) * binomial(n - 1, k1 - 1);
            b.value = hm >= stars ? hm : stars;
        }
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

ExtremalConfig make_config(const ProblemInstance& inst, const Natural& bound,
                           std::string label, std::vector<FamilyID> ids,
                           std::vector<std::string> desc) {
    ExtremalConfig cfg;
    cfg.case_label = std::move(label);
    cfg.family_desc = std::move(desc);
    cfg.total = 0;
    bool nonempty = true;
    Natural product = 1;
    std::vector<LInitialFamily> fams;
    for (const FamilyID& id : ids) {
        LInitialFamily f{id, size_from_id(id)};
        cfg.sizes.push_back(f.size);
        cfg.total += f.size;
        if (f.size == 0) nonempty = false;
        product *= f.size;
        fams.push_back(std::move(f));
    }
    bool cross = true;
    if (nonempty && product <= 10'000'000) {
        cfg.verify_method = "enumeration";
        std::vector<std::vector<KSet>> explicit_fams;
        for (const LInitialFamily& f : fams) {
            explicit_fams.push_back(enumerate_family(f.fid));
            if (Natural(static_cast<long>(explicit_fams.back().size())) != f.size)
                cross = false;  // stated size mismatch
        }
        for (std::size_t a = 0; a < explicit_fams.size() && cross; ++a)
            for (std::size_t b = a + 1; b < explicit_fams.size() && cross; ++b)
                cross = cross_intersecting_by_enumeration(explicit_fams[a],
                                                          explicit_fams[b]);
        cfg.families = std::move(explicit_fams);
    } else {
        cfg.verify_method = "size-threshold";
        for (std::size_t a = 0; a < fams.size() && cross; ++a)
            for (std::size_t b = 0; b < fams.size() && cross; ++b)
                if (a != b) cross = are_cross_intersecting(fams[a], fams[b]);
    }
    cfg.verified = nonempty && cross && cfg.total == bound;
    return cfg;
}

}  // namespace

std::vector<ExtremalConfig> extremal_configs(const ProblemInstance& inst) {
    const int n = inst.n;
    const int t = inst.t();
    const int kt = inst.k(t);
    BoundResult b = theorem_bound(inst);
    std::vector<ExtremalConfig> out;

    if (b.cover_attains) {
        // T = [k_t]; A_1 meets T, every other family contains T.
        std::vector<int> tset;
        for (int x = 1; x <= kt; ++x) tset.push_back(x);
        std::vector<FamilyID> ids;
        std::vector<std::string> desc;
        ids.push_back(normalize_id(KSet(n, {kt}), inst.k(1)));
        desc.push_back("all k_1-sets meeting T = [" + std::to_string(kt) + "]");
        for (int j = 2; j <= t; ++j) {
            ids.push_back(normalize_id(KSet(n, tset), inst.k(j)));
            desc.push_back("all k_" + std::to_string(j) + "-sets containing T");
        }
        out.push_back(make_config(inst, b.bound, "star-T", std::move(ids),
                                  std::move(desc)));
    }
    if (b.star_attains) {
        bool some_loose_pair = false;
        for (int i = 1; i <= t && !some_loose_pair; ++i)
            for (int j = i + 1; j <= t; ++j)
                if (n > inst.k(i) + inst.k(j)) {
                    some_loose_pair = true;
                    break;
                }
        if (some_loose_pair || t >= 3) {
            std::vector<FamilyID> ids;
            std::vector<std::string> desc;
            for (int j = 1; j <= t; ++j) {
                ids.push_back(normalize_id(KSet(n, {1}), inst.k(j)));
                desc.push_back("full star of element 1, k_" + std::to_string(j) +
                               "-uniform");
            }
            out.push_back(make_config(
                inst, b.bound,
                some_loose_pair ? "full-stars" : "equal-k-complement",
                std::move(ids), std::move(desc)));
        }
    }
    if (inst.degenerate()) {
        // A_1 = {[k_1]}, A_2 = all k_2-sets except the complement of [k_1].
        std::vector<int> first;
        for (int x = 1; x <= inst.k(1); ++x) first.push_back(x);
        std::vector<FamilyID> ids;
        ids.push_back(normalize_id(KSet(n, first), inst.k(1)));
        ids.push_back(
            normalize_id(lex_unrank(binomial(n, inst.k(2)) - 1, n, inst.k(2)),
                         inst.k(2)));
        out.push_back(make_config(
            inst, b.bound, "complement-pair", std::move(ids),
            {"the single set [k_1]",
             "all k_2-sets except the complement of [k_1]"}));
    }
    return out;
}

}  // namespace crossfam
