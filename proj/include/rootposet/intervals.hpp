#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootposet/poset.hpp"
#include "rootposet/root_poset.hpp"

namespace rootposet {

enum class ModelKind { A, BC, D };

struct IntervalLabel {
    int i = 1;
    int j = 1;
    bool primed = false;

    int length() const { return j - i + 1; }
    friend bool operator==(const IntervalLabel&, const IntervalLabel&) = default;
};

std::string to_string(const IntervalLabel& label);

// Poset of closed integer intervals ordered by containment. Three variants:
//   A(n)  : [i,j] with 1 <= i <= j <= n.
//   BC(n) : [i,j] with 1 <= i <= j <= 2n-1 and i+j <= 2n.
//   D(m)  : BC(m-1) plus a primed copy [i,m-1]' for each i; a primed and an
//           unprimed interval are incomparable when both end at m-1, and
//           primes are ignored otherwise.
// Grades (length - 1) match root heights minus one under the canonical maps
// below, so the models mirror the root posets of A_n, B_n/C_n and D_m.
struct IntervalModel {
    ModelKind kind = ModelKind::A;
    int rank_param = 0;  // rank of the diagram the model mirrors
    int n = 0;           // interval bound parameter (rank, or rank-1 for D)
    std::vector<IntervalLabel> labels;
    Poset order;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const IntervalLabel& label) const;  // -1 when absent
    int grade(int e) const { return labels[static_cast<size_t>(e)].length() - 1; }
    IndexSet grade_set(int a) const;
};

IntervalModel interval_model(ModelKind kind, int rank_param);

// A_n -> A(n), B_n/C_n -> BC(n), D_m -> D(m).
IntervalModel model_for(const DynkinDiagram& d);

// Elements comparable with e, e included.
IndexSet comparability_set(const Poset& p, int e);

// A subset is an almost chain when at most one of its pairs is incomparable.
bool is_almost_chain(const Poset& p, const IndexSet& subset);

// Hook-shaped chains through x = [i,j] (A and BC models only):
//   left_hook  = { [i,t] : i <= t <= j }  union  { [v,j] : v <= i }
//   right_hook = { [v,j] : i <= v <= j }  union  { [i,t] : t >= j }
IndexSet left_hook(const IntervalModel& mod, const IntervalLabel& x);
IndexSet right_hook(const IntervalModel& mod, const IntervalLabel& x);

struct HookChain {
    char side = 'L';  // 'L' or 'R'
    int s = 0;        // the hook through [s, s + grade]
    IndexSet members;
};

struct ComplementCover {
    int x = -1;  // element whose incomparables are covered
    std::vector<HookChain> chains;
};

// Partitions the incomparables of x = [i,j] into hook chains, one through
// each [s, s+a] with s != i, a = j-i. Family size is n-a-1 in A(n) and
// floor(n - a/2) - 1 in BC(n). Throws CoverFailure if the chains fail to
// partition the incomparables exactly.
ComplementCover cover_complement(const IntervalModel& mod, const IntervalLabel& x);

// Size of the largest antichain containing x, by branch and bound. For A and
// BC models the result is cross-checked against 1 + |cover_complement| and
// against the closed forms n-a and floor(n - a/2); mismatches throw
// VerificationFailure.
int max_antichain_through(const IntervalModel& mod, const IntervalLabel& x);

// Interval <-> coefficient dictionaries for families A, B, C. Coefficient
// vectors use the internal node order of dynkin(). Throws NotARoot when the
// vector is not a positive root, and VerificationFailure for bad labels.
IntervalLabel interval_of_coeffs(Family f, int rank, const std::vector<int>& coeffs);
std::vector<int> coeffs_of_interval(Family f, int rank, const IntervalLabel& label);

// Coefficient fold D_m -> rank m-1: the two fork coordinates add into the
// final coordinate. The result is a type-B coefficient pattern.
std::vector<int> fork_fold(const std::vector<int>& coeffs);

// Height-preserving projection of a D_m root onto a C_{m-1} root.
Root project_fork(const DynkinDiagram& dm, const Root& r);

// Element map realizing project_fork between the two root posets; checked
// order preserving and surjective, with two-element fibers exactly over the
// roots labeled [i, m-1] and singleton fibers elsewhere.
std::vector<int> project_poset(const RootPoset& d_poset, const RootPoset& c_poset);

// Order isomorphism from the root poset onto its interval model, element by
// element; throws VerificationFailure if the dictionary map fails to be one.
std::vector<int> canonical_model_map(const RootPoset& rp, const IntervalModel& mod);

// Search for an order isomorphism p -> q (signature refinement plus
// backtracking); nullopt when none exists.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);

struct FoldReport {
    std::string diagram;
    bool order_preserving = false;
    bool surjective = false;
    bool fibers_match = false;
    bool heights_preserved = false;
    bool square_commutes = false;       // fold of roots matches prime-dropping on labels
    bool hook_width_bounded = false;    // every hook preimage has width <= 2
    bool hook_pairs_are_twin_diagonals = false;
    bool almost_chain_iff_single_diagonal = false;
    bool preimage_matches_comparability = false;
    bool long_intervals_excluded = false;  // grade >= 3 never meets an (m-1)-antichain
    bool bound_holds = false;              // antichains through grade a capped by (m-1) - ceil(a/2) + 1
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Exercises the fold pipeline for D_m over the C_{m-1} root poset and the
// interval models, checking the fiber structure, the hook preimage shape and
// the antichain bounds it implies.
FoldReport check_fold(int m);

}  // namespace rootposet
