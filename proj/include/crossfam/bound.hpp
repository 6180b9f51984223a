#pragma once

#include <string>
#include <vector>

#include "crossfam/instance.hpp"
#include "crossfam/linitial.hpp"

namespace crossfam {

/// The two branch values of the main bound and their maximum.
/// cover_branch = C(n,k1) - C(n-kt,k1) + sum_{i>=2} C(n-kt, k_i-kt)
/// star_branch  = sum_i C(n-1, k_i-1)
struct BoundResult {
    Natural cover_branch;
    Natural star_branch;
    Natural bound;
    bool cover_attains = false;
    bool star_attains = false;
};

BoundResult theorem_bound(const ProblemInstance& inst);

/// The Z+1 candidate IDs of the distinguished family i (1-based), normalized,
/// in lex order: ranks C(n-1, k_i-1) + r for r = 0..Z,
/// Z = sum_{s=2}^{m} C(n-s, k_i-1).
std::vector<FamilyID> id_space(const ProblemInstance& inst, int i);

/// Same ranks as full (un-normalized) k_i-sets R_0..R_Z.
std::vector<KSet> id_space_padded(const ProblemInstance& inst, int i);

/// f_i(R): the size of the i-th family at ID R plus the maximal partner
/// family sizes of all other indices; an upper bound certificate for every
/// tuple whose i-th family has ID R.
struct FEvaluation {
    int i = 0;
    FamilyID id;
    Natural f_value;
    std::vector<Natural> per_family_sizes;  // index j-1 holds |A_j|
    Natural rank_offset;                    // |A_i| - C(n-1, k_i-1)
};

FEvaluation f_eval(const ProblemInstance& inst, int i, const FamilyID& r);

/// Gain in |A_i| when the ID advances from R to R2 (R ≺ R2).
Natural alpha(const ProblemInstance& inst, int i, const FamilyID& r,
              const FamilyID& r2);

/// Total loss across the other families when the ID advances from R to R2.
Natural beta(const ProblemInstance& inst, int i, const FamilyID& r,
             const FamilyID& r2);

struct ScanReport {
    Natural max_value;
    std::vector<FamilyID> argmax;  // all maximizing IDs, lowest rank first
    bool attained_at_one = false;  // argmax contains the normalized {1}
    bool attained_at_m = false;    // argmax contains the normalized {m}
    std::vector<FEvaluation> curve;  // full curve when requested
};

ScanReport f_scan(const ProblemInstance& inst, int i, bool keep_curve = false);

/// Named reference bound, evaluated only when its hypothesis matches.
struct NamedBound {
    std::string name;
    bool applicable = false;
    Natural value;
    std::string note;
};

std::vector<NamedBound> reference_bounds(const ProblemInstance& inst);

/// An equality-case witness: explicit families of the stated shape, verified
/// non-empty, pairwise cross-intersecting, and bound-achieving.
struct ExtremalConfig {
    std::string case_label;  // star-T | full-stars | complement-pair | equal-k-complement
    std::vector<std::string> family_desc;
    std::vector<std::vector<KSet>> families;
    std::vector<Natural> sizes;
    Natural total;
    bool verified = false;
    std::string verify_method;  // "enumeration" or "size-threshold"
};

std::vector<ExtremalConfig> extremal_configs(const ProblemInstance& inst);

}  // namespace crossfam
